#include "eqschubert/latticepaths.hpp"

#include <algorithm>
#include <set>

#include "eqschubert/error.hpp"
#include "eqschubert/restriction.hpp"

namespace eqschubert {

std::size_t PathTuple::cell_count() const {
  std::size_t total = 0;
  for (const auto& p : paths) total += p.cells.size();
  return total;
}

namespace {

bool in_pos(const Cell& cell, const GIndex& v) {
  return cell.r > cell.c && v.contains(cell.c) && !v.contains(cell.r) && cell.r >= 1 &&
         cell.r <= static_cast<int>(v.n());
}

}  // namespace

Cell step_down(const Cell& cell, const GIndex& v) {
  for (int r = cell.r + 1; r <= static_cast<int>(v.n()); ++r) {
    if (!v.contains(r)) return {r, cell.c};
  }
  return {0, cell.c};
}

Cell step_right(const Cell& cell, const GIndex& v) {
  for (int c : v.entries()) {
    if (c > cell.c) return {cell.r, c};
  }
  return {cell.r, 0};
}

Endpoints beta_endpoints(const Cell& beta, const GIndex& v) {
  if (!in_pos(beta, v)) {
    throw InvalidArgument("beta_endpoints: " + to_string(beta) + " is not in pos^v for v=" +
                          v.to_string());
  }
  Endpoints ends{beta, beta};
  for (int r = beta.c + 1; r <= beta.r; ++r) {
    if (!v.contains(r)) {
      ends.start = {r, beta.c};
      break;
    }
  }
  for (int c : v.entries()) {
    if (c < beta.r) ends.finish = {beta.r, c};
  }
  return ends;
}

namespace {

class TupleEnumerator {
 public:
  TupleEnumerator(const GIndex& v, std::vector<Endpoints> ends)
      : v_(v), ends_(std::move(ends)), current_(ends_.size()) {}

  std::vector<PathTuple> run() {
    next_path(0);
    return std::move(found_);
  }

 private:
  void next_path(std::size_t index) {
    if (index == ends_.size()) {
      found_.push_back(PathTuple{current_});
      return;
    }
    const Cell start = ends_[index].start;
    if (used_.count(start)) return;
    current_[index].cells = {start};
    used_.insert(start);
    extend(index);
    used_.erase(start);
    current_[index].cells.clear();
  }

  // Depth-first over step choices; the right step sorts before the down
  // step, so tuples come out in lexicographic order.
  void extend(std::size_t index) {
    auto& path = current_[index].cells;
    const Cell here = path.back();
    const Cell finish = ends_[index].finish;
    if (here == finish) {
      next_path(index + 1);
      return;
    }
    for (const Cell next : {step_right(here, v_), step_down(here, v_)}) {
      if (next.r == 0 || next.c == 0) continue;
      if (next.r > finish.r || next.c > finish.c) continue;
      if (!in_pos(next, v_) || used_.count(next)) continue;
      path.push_back(next);
      used_.insert(next);
      extend(index);
      used_.erase(next);
      path.pop_back();
    }
  }

  const GIndex& v_;
  std::vector<Endpoints> ends_;
  std::vector<LatticePath> current_;
  std::set<Cell> used_;
  std::vector<PathTuple> found_;
};

}  // namespace

std::vector<PathTuple> enumerate_tuples(const GIndex& u, const GIndex& v) {
  std::vector<Endpoints> ends;
  for (const auto& beta : mon(u, v)) ends.push_back(beta_endpoints(beta, v));
  auto tuples = TupleEnumerator(v, std::move(ends)).run();
  auto flat = [](const PathTuple& t) {
    std::vector<Cell> cells;
    for (const auto& p : t.paths) cells.insert(cells.end(), p.cells.begin(), p.cells.end());
    return cells;
  };
  std::sort(tuples.begin(), tuples.end(),
            [&](const PathTuple& a, const PathTuple& b) { return flat(a) < flat(b); });
  return tuples;
}

Polynomial m_face(const PathTuple& tuple, const GIndex& u, const GIndex& v) {
  if (u.d() != v.d() || u.n() != v.n()) throw DimensionError("m_face: ambient mismatch");
  std::set<Cell> covered;
  for (const auto& p : tuple.paths) covered.insert(p.cells.begin(), p.cells.end());
  Polynomial out = Polynomial::constant(v.n(), 1);
  for (const auto& cell : pos_of(v)) {
    if (!covered.count(cell)) out *= eps(v.n(), cell.r, cell.c);
  }
  return out;
}

std::vector<Cell> maximal_face(const PathTuple& tuple, const GIndex& v) {
  std::set<Cell> face;
  for (const auto& p : tuple.paths) face.insert(p.cells.begin(), p.cells.end());
  for (const auto& cell : roots_of(v)) {
    if (cell.r < cell.c) face.insert(cell);
  }
  return {face.begin(), face.end()};
}

Polynomial path_sum(const GIndex& u, const GIndex& v) {
  if (u.d() != v.d() || u.n() != v.n()) throw DimensionError("path_sum: ambient mismatch");
  Polynomial total(v.n());
  if (!leq(v, u)) return total;
  for (const auto& t : enumerate_tuples(u, v)) total += m_face(t, u, v);
  return total;
}

std::vector<FaceMonomial> face_ideal_generators(const GIndex& u, const GIndex& v) {
  const auto tuples = enumerate_tuples(u, v);
  const auto roots = roots_of(v);

  // Intersect the prime ideals (x_c : c outside the face) one face at a time,
  // keeping a minimal squarefree generating set.
  std::vector<FaceMonomial> gens;
  bool first = true;
  for (const auto& t : tuples) {
    const auto face = maximal_face(t, v);
    std::vector<Cell> complement;
    std::set_difference(roots.begin(), roots.end(), face.begin(), face.end(),
                        std::back_inserter(complement));
    if (complement.empty()) return {};
    std::set<FaceMonomial> next;
    if (first) {
      for (const auto& x : complement) next.insert({x});
      first = false;
    } else {
      for (const auto& g : gens) {
        bool hits = std::any_of(g.begin(), g.end(), [&](const Cell& x) {
          return std::binary_search(complement.begin(), complement.end(), x);
        });
        if (hits) {
          next.insert(g);
          continue;
        }
        for (const auto& x : complement) {
          FaceMonomial h = g;
          h.insert(std::upper_bound(h.begin(), h.end(), x), x);
          next.insert(std::move(h));
        }
      }
    }
    gens.clear();
    for (const auto& g : next) {
      bool redundant = std::any_of(next.begin(), next.end(), [&](const FaceMonomial& h) {
        return h != g && h.size() < g.size() &&
               std::includes(g.begin(), g.end(), h.begin(), h.end());
      });
      if (!redundant) gens.push_back(g);
    }
  }
  std::sort(gens.begin(), gens.end(), [](const FaceMonomial& a, const FaceMonomial& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return gens;
}

}  // namespace eqschubert
