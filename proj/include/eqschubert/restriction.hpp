#pragma once

// Restriction of the equivariant Schubert class [X(u)] to the fixed point e^v,
// computed as a ratio of two determinants.

#include <vector>

#include "eqschubert/gindex.hpp"
#include "eqschubert/polynomial.hpp"

namespace eqschubert {

using PolyMatrix = std::vector<std::vector<Polynomial>>;

/// e_r - e_c in n variables.
Polynomial eps(std::size_t n, int r, int c);

/// prod_{j=k..r} (e_j - e_p). The empty range k = r + 1 gives 1.
Polynomial mu(std::size_t n, int k, int r, int p);

/// prod_{i<j} (e_{v_j} - e_{v_i}).
Polynomial vandermonde(const GIndex& v);

/// Exact determinant by cofactor expansion along rows, memoised on the set
/// of columns still available. Throws InvalidArgument if M is not square.
Polynomial det(const PolyMatrix& m);

/// The d x d matrix with (i, j) entry mu(u_i + 1 .. n; v_j).
PolyMatrix restriction_numerator_matrix(const GIndex& u, const GIndex& v);

/// [X(u)]|_v. Zero exactly when v is not <= u. Throws InternalError if the
/// Vandermonde quotient is not exact.
Polynomial restrict_det(const GIndex& u, const GIndex& v);

/// prod over (r, c) in pos^u of (e_r - e_c): the value of [X(u)]|_u.
Polynomial tangent_weight_product(const GIndex& u);

}  // namespace eqschubert
