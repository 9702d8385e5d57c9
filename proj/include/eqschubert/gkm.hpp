#pragma once

// The equivariant cohomology of Gr(d,n) as tuples of restrictions to the
// torus-fixed points: Schubert classes, the GKM edge condition, expansion in
// the Schubert basis and structure constants.

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "eqschubert/gindex.hpp"
#include "eqschubert/linfraction.hpp"
#include "eqschubert/polynomial.hpp"

namespace eqschubert {

/// Lexicographic position of v among all_indices(v.d(), v.n()).
std::size_t index_position(const GIndex& v);

/// A class given by its restriction at every fixed point of Gr(d,n).
class EqClass {
 public:
  /// The zero class.
  EqClass(std::size_t d, std::size_t n);

  /// The class of the whole Grassmannian: every restriction is 1.
  static EqClass identity(std::size_t d, std::size_t n);

  std::size_t d() const { return d_; }
  std::size_t n() const { return n_; }
  const std::vector<GIndex>& indices() const { return *indices_; }
  /// Restrictions aligned with indices().
  const std::vector<Polynomial>& restrictions() const { return values_; }

  const Polynomial& at(const GIndex& v) const;
  void set(const GIndex& v, Polynomial value);

  bool is_zero() const;

  EqClass& operator+=(const EqClass& other);
  EqClass& operator-=(const EqClass& other);
  EqClass& operator*=(const EqClass& other);
  /// Multiplication by an element of the base ring.
  EqClass& operator*=(const Polynomial& scalar);

  friend EqClass operator+(EqClass a, const EqClass& b) { return a += b; }
  friend EqClass operator-(EqClass a, const EqClass& b) { return a -= b; }
  friend EqClass operator*(EqClass a, const EqClass& b) { return a *= b; }
  friend EqClass operator*(EqClass a, const Polynomial& s) { return a *= s; }
  friend bool operator==(const EqClass& a, const EqClass& b) {
    return a.d_ == b.d_ && a.n_ == b.n_ && a.values_ == b.values_;
  }

 private:
  void check_same(const EqClass& other) const;
  std::size_t d_, n_;
  std::shared_ptr<const std::vector<GIndex>> indices_;
  std::vector<Polynomial> values_;
};

/// [X(u)]: restriction restrict_det(u, v) at every v.
EqClass schubert_class(const GIndex& u);

/// Every Schubert class of one Grassmannian, computed once.
class SchubertBasis {
 public:
  /// `jobs` > 1 computes the classes on that many threads.
  SchubertBasis(std::size_t d, std::size_t n, unsigned jobs = 1);

  std::size_t d() const { return d_; }
  std::size_t n() const { return n_; }
  const std::vector<GIndex>& indices() const { return indices_; }
  const EqClass& operator[](const GIndex& u) const;
  /// [X(u)]|_v.
  const Polynomial& restriction(const GIndex& u, const GIndex& v) const;

 private:
  std::size_t d_, n_;
  std::vector<GIndex> indices_;
  std::vector<EqClass> classes_;
};

struct GkmViolation {
  GIndex w;
  GIndex x;  // x = (w with i replaced by j)
  int i = 0;
  int j = 0;
};

struct GkmReport {
  bool ok = true;
  std::vector<GkmViolation> violations;
};

/// Checks that e_j - e_i divides a|_x - a|_w on every edge
/// x = (w + {j}) - {i}. Each edge is visited once, with i < j.
GkmReport gkm_check(const EqClass& a);

using Expansion = std::map<GIndex, Polynomial>;

/// Coefficients c_w with a = sum_w c_w [X(w)] (nonzero entries only).
/// Throws NotInSpan if a is not an integral combination of Schubert classes.
Expansion expand(const EqClass& a, const SchubertBasis& basis);
Expansion expand(const EqClass& a);

/// Structure constants of [X(u)] * [X(v)] by triangular solve.
Expansion struct_consts_solve(const GIndex& u, const GIndex& v, const SchubertBasis& basis);
Expansion struct_consts_solve(const GIndex& u, const GIndex& v);

struct ChainOptions {
  /// The chain method is refused above this n.
  std::size_t max_n = 6;
  /// Refuse once more than this many chains have been visited.
  std::size_t max_chains = 5'000'000;
};

/// c_uv^w as a signed sum over chains w = y_0 < ... < y_k with y_k <= u and
/// y_k <= v, evaluated exactly in LinFraction arithmetic. Zero unless w <= u
/// and w <= v. Throws NotPolynomial if a denominator survives.
Polynomial struct_const_chain(const GIndex& u, const GIndex& v, const GIndex& w,
                              const SchubertBasis& basis, const ChainOptions& opts = {});
Polynomial struct_const_chain(const GIndex& u, const GIndex& v, const GIndex& w,
                              const ChainOptions& opts = {});

/// Number of chains the chain method visits for (u, v, w).
std::size_t chain_count(const GIndex& u, const GIndex& v, const GIndex& w);

struct StructConstEntry {
  GIndex u, v, w;
  Polynomial c;
};

enum class StructConstMethod { solve, chain };

/// Every nonzero c_uv^w over ordered pairs (u, v), sorted by (u, v, w).
std::vector<StructConstEntry> struct_const_table(std::size_t d, std::size_t n,
                                                 StructConstMethod method, unsigned jobs = 1,
                                                 const ChainOptions& opts = {});

/// Rewrites p in y_i = e_{i+1} - e_i by substituting e_i -> y_1 + ... + y_{i-1}
/// (variable k of the result stands for y_k). Meaningful for polynomials in
/// the differences e_r - e_c.
Polynomial to_simple_root_coordinates(const Polynomial& p);

/// True if every coefficient of to_simple_root_coordinates(p) is >= 0.
bool is_graham_positive(const Polynomial& p);

}  // namespace eqschubert
