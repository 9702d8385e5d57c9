#include "eqschubert/gindex.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "eqschubert/error.hpp"

namespace eqschubert {

GIndex::GIndex(std::size_t n, std::vector<int> entries) : n_(n), entries_(std::move(entries)) {
  if (entries_.empty() || entries_.size() > n_) {
    throw InvalidArgument("index must have between 1 and n entries");
  }
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i] < 1 || entries_[i] > static_cast<int>(n_)) {
      throw InvalidArgument("index entry " + std::to_string(entries_[i]) + " outside 1.." +
                            std::to_string(n_));
    }
    if (i > 0 && entries_[i] <= entries_[i - 1]) {
      throw InvalidArgument("index entries must be strictly increasing");
    }
  }
}

GIndex GIndex::parse(std::string_view literal, std::size_t d, std::size_t n) {
  std::vector<int> entries;
  std::size_t pos = 0;
  while (pos <= literal.size()) {
    std::size_t comma = literal.find(',', pos);
    if (comma == std::string_view::npos) comma = literal.size();
    std::string_view token = literal.substr(pos, comma - pos);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
      throw InvalidArgument("malformed index literal '" + std::string(literal) + "'");
    }
    entries.push_back(value);
    pos = comma + 1;
  }
  if (entries.size() != d) {
    throw InvalidArgument("index literal '" + std::string(literal) + "' needs " +
                          std::to_string(d) + " entries");
  }
  return GIndex(n, std::move(entries));
}

GIndex GIndex::top(std::size_t d, std::size_t n) {
  std::vector<int> e(d);
  std::iota(e.begin(), e.end(), static_cast<int>(n - d + 1));
  return GIndex(n, std::move(e));
}

GIndex GIndex::bottom(std::size_t d, std::size_t n) {
  std::vector<int> e(d);
  std::iota(e.begin(), e.end(), 1);
  return GIndex(n, std::move(e));
}

bool GIndex::contains(int x) const {
  return std::binary_search(entries_.begin(), entries_.end(), x);
}

std::string GIndex::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(entries_[i]);
  }
  return out;
}

int Partition::size() const { return std::accumulate(parts.begin(), parts.end(), 0); }

std::string to_string(const Cell& cell) {
  return "(" + std::to_string(cell.r) + "," + std::to_string(cell.c) + ")";
}

std::vector<GIndex> all_indices(std::size_t d, std::size_t n) {
  if (d < 1 || d > n) {
    throw InvalidArgument("need 1 <= d <= n, got d=" + std::to_string(d) +
                          " n=" + std::to_string(n));
  }
  std::vector<GIndex> out;
  std::vector<int> e(d);
  std::iota(e.begin(), e.end(), 1);
  const int nn = static_cast<int>(n);
  while (true) {
    out.emplace_back(n, e);
    // Advance to the next combination in lexicographic order.
    std::size_t i = d;
    while (i > 0 && e[i - 1] == nn - static_cast<int>(d - i)) --i;
    if (i == 0) break;
    ++e[i - 1];
    for (std::size_t j = i; j < d; ++j) e[j] = e[j - 1] + 1;
  }
  return out;
}

bool leq(const GIndex& u, const GIndex& v) {
  if (u.d() != v.d() || u.n() != v.n()) {
    throw DimensionError("comparing indices from different Grassmannians");
  }
  for (std::size_t i = 0; i < u.d(); ++i) {
    if (u.entries()[i] > v.entries()[i]) return false;
  }
  return true;
}

bool less(const GIndex& u, const GIndex& v) { return leq(u, v) && u != v; }

Partition lambda_of(const GIndex& u) {
  Partition p;
  const int n = static_cast<int>(u.n()), d = static_cast<int>(u.d());
  for (int i = 1; i <= d; ++i) p.parts.push_back(n - d + i - u[i]);
  return p;
}

GIndex index_of(const Partition& lambda, std::size_t d, std::size_t n) {
  if (lambda.parts.size() != d) throw InvalidArgument("partition must have d parts");
  const int nd = static_cast<int>(n - d);
  std::vector<int> e(d);
  for (std::size_t i = 0; i < d; ++i) {
    int part = lambda.parts[i];
    if (part < 0 || part > nd || (i > 0 && part > lambda.parts[i - 1])) {
      throw InvalidArgument("not a partition inside the d x (n-d) box");
    }
    e[i] = nd + static_cast<int>(i) + 1 - part;
  }
  return GIndex(n, std::move(e));
}

int codim(const GIndex& u) { return lambda_of(u).size(); }

std::vector<Cell> roots_of(const GIndex& v) {
  std::vector<Cell> out;
  for (int r = 1; r <= static_cast<int>(v.n()); ++r) {
    if (v.contains(r)) continue;
    for (int c : v.entries()) out.push_back({r, c});
  }
  return out;
}

std::vector<Cell> pos_of(const GIndex& v) {
  std::vector<Cell> out;
  for (const auto& cell : roots_of(v)) {
    if (cell.r > cell.c) out.push_back(cell);
  }
  return out;
}

std::vector<Cell> mon(const GIndex& u, const GIndex& v) {
  if (!leq(v, u)) {
    throw NotComparable("mon(u, v) needs v <= u; got u=" + u.to_string() +
                        " v=" + v.to_string());
  }
  // Peel off u_1 against the largest remaining v_i <= u_1.
  std::vector<int> rest_u = u.entries();
  std::vector<int> rest_v = v.entries();
  std::vector<Cell> out;
  while (!rest_u.empty()) {
    int u1 = rest_u.front();
    auto it = std::upper_bound(rest_v.begin(), rest_v.end(), u1);
    if (it == rest_v.begin()) {
      throw InternalError("mon recursion lost comparability");
    }
    --it;
    if (*it != u1) out.push_back({u1, *it});
    rest_v.erase(it);
    rest_u.erase(rest_u.begin());
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace eqschubert
