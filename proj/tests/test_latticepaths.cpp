#include "doctest.h"

#include <set>

#include "eqschubert/error.hpp"
#include "eqschubert/gkm.hpp"
#include "eqschubert/latticepaths.hpp"
#include "eqschubert/restriction.hpp"
#include "support/oracles.hpp"

using namespace eqschubert;

namespace {

const std::vector<std::pair<std::size_t, std::size_t>> kSweep{{2, 4}, {2, 5}, {3, 6}};

GIndex I(std::initializer_list<int> xs, std::size_t n) { return GIndex(n, std::vector<int>(xs)); }

std::vector<std::vector<Cell>> as_cells(const PathTuple& t) {
  std::vector<std::vector<Cell>> out;
  for (const auto& p : t.paths) out.push_back(p.cells);
  return out;
}

}  // namespace

TEST_SUITE("latticepaths") {
  TEST_CASE("beta endpoints") {
    const auto v = I({1, 2, 3, 4, 5, 10, 11, 12, 13, 18, 19, 20, 21, 22}, 27);
    const auto ends = beta_endpoints({16, 11}, v);
    CHECK(ends.start == Cell{14, 11});
    CHECK(ends.finish == Cell{16, 13});
    CHECK_THROWS_AS(beta_endpoints({11, 16}, v), InvalidArgument);
    CHECK_THROWS_AS(beta_endpoints({10, 3}, v), InvalidArgument);
  }

  TEST_CASE("steps") {
    const auto v = I({1, 2, 3, 8, 9, 10}, 13);
    CHECK(step_down({4, 1}, v) == Cell{5, 1});
    CHECK(step_down({7, 1}, v) == Cell{11, 1});
    CHECK(step_down({13, 1}, v).r == 0);
    CHECK(step_right({11, 3}, v) == Cell{11, 8});
    CHECK(step_right({11, 10}, v).c == 0);
  }

  TEST_CASE("the worked 6 x 13 example has nine tuples") {
    const auto u = I({4, 6, 7, 10, 11, 13}, 13);
    const auto v = I({1, 2, 3, 8, 9, 10}, 13);
    const auto tuples = enumerate_tuples(u, v);
    CHECK(tuples.size() == 9);
    CHECK(path_sum(u, v) == restrict_det(u, v));
  }

  TEST_CASE("degenerate cases") {
    for (std::size_t n = 2; n <= 6; ++n) {
      for (std::size_t d = 1; d < n; ++d) {
        const auto top = GIndex::top(d, n), bottom = GIndex::bottom(d, n);
        const auto tuples = enumerate_tuples(top, top);
        REQUIRE(tuples.size() == 1);
        CHECK(tuples[0].paths.empty());
        CHECK(m_face(tuples[0], top, top) == Polynomial::constant(n, 1));
        CHECK(maximal_face(tuples[0], top) == roots_of(top));
        CHECK(path_sum(bottom, bottom) == tangent_weight_product(bottom));
      }
    }
    CHECK(path_sum(I({1}, 2), I({2}, 2)).is_zero());
    CHECK_THROWS_AS(enumerate_tuples(I({1}, 2), I({2}, 2)), NotComparable);
  }

  TEST_CASE("tuples obey the step rule, are disjoint and have equal size") {
    for (auto [d, n] : std::vector<std::pair<std::size_t, std::size_t>>{{2, 5}, {3, 6}, {3, 7}}) {
      const auto all = all_indices(d, n);
      for (const auto& u : all) {
        for (const auto& v : all) {
          if (!leq(v, u)) continue;
          const auto tuples = enumerate_tuples(u, v);
          REQUIRE_FALSE(tuples.empty());
          const auto m = mon(u, v);
          const auto pos = pos_of(v);
          for (const auto& t : tuples) {
            REQUIRE(t.paths.size() == m.size());
            std::set<Cell> seen;
            for (std::size_t k = 0; k < t.paths.size(); ++k) {
              const auto& cells = t.paths[k].cells;
              const auto ends = beta_endpoints(m[k], v);
              CHECK(cells.front() == ends.start);
              CHECK(cells.back() == ends.finish);
              for (std::size_t s = 0; s < cells.size(); ++s) {
                CHECK(std::binary_search(pos.begin(), pos.end(), cells[s]));
                CHECK(seen.insert(cells[s]).second);
                if (s > 0) {
                  const bool down = cells[s] == step_down(cells[s - 1], v);
                  const bool right = cells[s] == step_right(cells[s - 1], v);
                  CHECK((down || right));
                }
              }
            }
            CHECK(t.cell_count() == tuples.front().cell_count());
          }
        }
      }
    }
  }

  TEST_CASE("enumeration matches brute force and is in canonical order") {
    for (auto [d, n] : std::vector<std::pair<std::size_t, std::size_t>>{{2, 5}, {3, 6}, {3, 7}}) {
      const auto all = all_indices(d, n);
      for (const auto& u : all) {
        for (const auto& v : all) {
          if (!leq(v, u)) continue;
          const auto tuples = enumerate_tuples(u, v);
          std::set<std::vector<std::vector<Cell>>> got;
          for (const auto& t : tuples) got.insert(as_cells(t));
          CHECK(got.size() == tuples.size());
          CHECK(got == oracle::brute_tuples(u, v));
          for (std::size_t k = 1; k < tuples.size(); ++k) {
            std::vector<Cell> a, b;
            for (const auto& p : tuples[k - 1].paths) a.insert(a.end(), p.cells.begin(), p.cells.end());
            for (const auto& p : tuples[k].paths) b.insert(b.end(), p.cells.begin(), p.cells.end());
            CHECK(a < b);
          }
        }
      }
    }
  }

  TEST_CASE("path sum equals the determinantal restriction") {
    for (auto [d, n] : kSweep) {
      const auto all = all_indices(d, n);
      for (const auto& u : all) {
        for (const auto& v : all) CHECK(path_sum(u, v) == restrict_det(u, v));
      }
    }
  }

  TEST_CASE("path sums are positive in the simple roots") {
    for (auto [d, n] : kSweep) {
      const auto all = all_indices(d, n);
      for (const auto& u : all) {
        for (const auto& v : all) {
          if (leq(v, u)) CHECK(is_graham_positive(path_sum(u, v)));
        }
      }
    }
  }

  TEST_CASE("face ideal generators are the minimal non-faces") {
    for (auto [d, n] : kSweep) {
      const auto all = all_indices(d, n);
      for (const auto& u : all) {
        for (const auto& v : all) {
          if (!leq(v, u)) continue;
          std::vector<std::vector<Cell>> facets;
          for (const auto& t : enumerate_tuples(u, v)) facets.push_back(maximal_face(t, v));
          const auto expected = oracle::minimal_non_faces(roots_of(v), facets);
          const auto gens = face_ideal_generators(u, v);
          CHECK(std::set<std::vector<Cell>>(gens.begin(), gens.end()) == expected);
          for (std::size_t k = 1; k < gens.size(); ++k) CHECK(gens[k - 1].size() <= gens[k].size());
        }
      }
    }
  }
}
