#pragma once

// Equivariant Giambelli: [X(u)] as a d x d determinant whose entries are
// combinations of special classes with complete-homogeneous coefficients.

#include "eqschubert/gkm.hpp"
#include "eqschubert/restriction.hpp"

namespace eqschubert {

/// Index of the special Schubert variety with partition (p, 0, ..., 0):
/// (n-d+1-p, n-d+2, ..., n). Requires 0 <= p <= n-d.
GIndex special_index(int p, std::size_t d, std::size_t n);

/// [p]; the zero class when p is outside 0..n-d.
EqClass special_class(int p, std::size_t d, std::size_t n);

/// c(u_i, j, k) = (-1)^k h_k(e_{u_i-j+1+k}, ..., e_{u_i}). Requires
/// u_i - j + 1 + k >= 1.
Polynomial giambelli_coefficient(std::size_t n, int ui, int j, int k);

/// The class u[i, j] = sum_{k<j} c(u_i, j, k) [lambda_i + j - i - k], with
/// summands skipped when u_i - j + 1 + k <= 0 (their special class is zero).
EqClass giambelli_entry(const GIndex& u, std::size_t i, std::size_t j);

/// The entry matrix restricted to the fixed point v.
PolyMatrix giambelli_matrix_at(const GIndex& u, const GIndex& v);

/// det of the entry matrix, evaluated at every fixed point.
EqClass giambelli_class(const GIndex& u);

/// Parameters of the h_k / mu telescoping identity that drives the proof of
/// the Giambelli formula.
struct HkIdentityParams {
  std::size_t n = 0;
  int ui = 0;  // u_i
  int j = 0;
  int m = 0;   // 0 <= m <= j - 1
  int vs = 0;  // v_s
};

/// sum_{k=0..m} (-1)^k h_k(e_{ui-j+1+k}, ..., e_{ui}) mu(ui-j+k+2 .. n; vs).
Polynomial hk_identity_lhs(const HkIdentityParams& p);
/// (-1)^m h_m(e_{vs}, e_{ui-j+2+m}, ..., e_{ui}) mu(ui-j+m+2 .. n; vs).
Polynomial hk_identity_rhs(const HkIdentityParams& p);
/// Both sides agree exactly. Throws InvalidArgument on bad parameters.
bool hk_identity_check(const HkIdentityParams& p);

}  // namespace eqschubert
