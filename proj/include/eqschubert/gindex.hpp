#pragma once

// Combinatorics of I(d,n): d-subsets of {1..n}, Bruhat order, partitions,
// the root sets roots^v / pos^v, and the cell set mon(u, v).

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace eqschubert {

/// Strictly increasing d-subset of {1, ..., n}; entries are 1-based.
class GIndex {
 public:
  GIndex() = default;
  /// Validates strict increase and bounds; throws InvalidArgument.
  GIndex(std::size_t n, std::vector<int> entries);

  /// Parses "4,6,7,10,11,13". The literal must have exactly d entries.
  static GIndex parse(std::string_view literal, std::size_t d, std::size_t n);
  /// (n-d+1, ..., n): the whole Grassmannian.
  static GIndex top(std::size_t d, std::size_t n);
  /// (1, ..., d): the point Schubert variety.
  static GIndex bottom(std::size_t d, std::size_t n);

  std::size_t d() const { return entries_.size(); }
  std::size_t n() const { return n_; }
  const std::vector<int>& entries() const { return entries_; }
  /// 1-based access: u[1] = u_1.
  int operator[](std::size_t i) const { return entries_.at(i - 1); }
  bool contains(int x) const;

  std::string to_string() const;

  friend bool operator==(const GIndex&, const GIndex&) = default;
  /// Lexicographic on entries (ambient compared first).
  friend auto operator<=>(const GIndex&, const GIndex&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<int> entries_;
};

/// Weakly decreasing parts bounded by n - d.
struct Partition {
  std::vector<int> parts;

  int size() const;
  friend bool operator==(const Partition&, const Partition&) = default;
};

/// A position (r, c): r plays the row, c the column.
struct Cell {
  int r = 0;
  int c = 0;

  friend bool operator==(const Cell&, const Cell&) = default;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

std::string to_string(const Cell& cell);

/// All C(n, d) indices in lexicographic order.
std::vector<GIndex> all_indices(std::size_t d, std::size_t n);

/// Bruhat order: u <= v iff u_i <= v_i for every i. Throws DimensionError on
/// an ambient mismatch.
bool leq(const GIndex& u, const GIndex& v);
/// leq(u, v) && u != v.
bool less(const GIndex& u, const GIndex& v);

/// lambda_i = n - d + i - u_i.
Partition lambda_of(const GIndex& u);
/// Inverse of lambda_of.
GIndex index_of(const Partition& lambda, std::size_t d, std::size_t n);
/// Codimension of X(u): |lambda(u)|.
int codim(const GIndex& u);

/// {(r, c) : c in v, r not in v}, sorted.
std::vector<Cell> roots_of(const GIndex& v);
/// The cells of roots_of(v) with r > c, sorted.
std::vector<Cell> pos_of(const GIndex& v);

/// The cells encoding how u differs from v, sorted by row. Requires v <= u;
/// throws NotComparable otherwise.
std::vector<Cell> mon(const GIndex& u, const GIndex& v);

}  // namespace eqschubert
