#pragma once

// Maximal faces of the Stanley-Reisner complex of the degenerated Schubert
// patch, indexed by tuples of non-intersecting lattice paths in pos^v.

#include <vector>

#include "eqschubert/gindex.hpp"
#include "eqschubert/polynomial.hpp"

namespace eqschubert {

struct LatticePath {
  std::vector<Cell> cells;

  friend auto operator<=>(const LatticePath&, const LatticePath&) = default;
};

/// One path per cell of mon(u, v), in mon's row order.
struct PathTuple {
  std::vector<LatticePath> paths;

  std::size_t cell_count() const;
  friend auto operator<=>(const PathTuple&, const PathTuple&) = default;
};

struct Endpoints {
  Cell start;
  Cell finish;
};

/// For beta = (r0, c0) in pos^v: start = (min{r not in v : r > c0}, c0) and
/// finish = (r0, max{c in v : c < r0}). Throws InvalidArgument otherwise.
Endpoints beta_endpoints(const Cell& beta, const GIndex& v);

/// The cell one step down (next row index outside v) or right (next column
/// index inside v) from `cell`; r = 0 / c = 0 when no such index exists.
Cell step_down(const Cell& cell, const GIndex& v);
Cell step_right(const Cell& cell, const GIndex& v);

/// All tuples of pairwise disjoint lattice paths, lexicographically ordered
/// on the concatenated cell sequences. u == v yields one empty tuple.
/// Throws NotComparable if v is not <= u.
std::vector<PathTuple> enumerate_tuples(const GIndex& u, const GIndex& v);

/// Product of (e_r - e_c) over the cells of pos^v not covered by the paths.
Polynomial m_face(const PathTuple& tuple, const GIndex& u, const GIndex& v);

/// Cells of the maximal face: path cells plus roots^v \ pos^v, sorted.
std::vector<Cell> maximal_face(const PathTuple& tuple, const GIndex& v);

/// Sum of m_face over all tuples; zero when v is not <= u.
Polynomial path_sum(const GIndex& u, const GIndex& v);

/// A squarefree monomial in the vertex variables x_(r,c), (r,c) in roots^v,
/// given by its support (sorted).
using FaceMonomial = std::vector<Cell>;

/// Minimal generators of the face ideal: the intersection over maximal
/// faces of the ideals generated by the complement variables. Sorted by
/// (size, support).
std::vector<FaceMonomial> face_ideal_generators(const GIndex& u, const GIndex& v);

}  // namespace eqschubert
