#include "eqschubert/restriction.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

#include "eqschubert/error.hpp"
#include "eqschubert/linfraction.hpp"

namespace eqschubert {

Polynomial eps(std::size_t n, int r, int c) {
  return Polynomial::difference(n, static_cast<std::size_t>(r), static_cast<std::size_t>(c));
}

Polynomial mu(std::size_t n, int k, int r, int p) {
  const int nn = static_cast<int>(n);
  if (p < 1 || p > nn) throw InvalidArgument("mu: p outside 1..n");
  if (k > r + 1) throw InvalidArgument("mu: need k <= r + 1");
  if (k == r + 1) return Polynomial::constant(n, 1);
  if (k < 1 || r > nn) throw InvalidArgument("mu: range outside 1..n");
  if (p >= k && p <= r) return Polynomial(n);
  Polynomial out = Polynomial::constant(n, 1);
  for (int j = k; j <= r; ++j) out *= eps(n, j, p);
  return out;
}

Polynomial vandermonde(const GIndex& v) {
  const std::size_t n = v.n();
  Polynomial out = Polynomial::constant(n, 1);
  for (std::size_t j = 2; j <= v.d(); ++j) {
    for (std::size_t i = 1; i < j; ++i) out *= eps(n, v[j], v[i]);
  }
  return out;
}

Polynomial det(const PolyMatrix& m) {
  const std::size_t d = m.size();
  for (const auto& row : m) {
    if (row.size() != d) throw InvalidArgument("det: matrix is not square");
  }
  if (d == 0) throw InvalidArgument("det: empty matrix");
  if (d > 20) throw InvalidArgument("det: matrix too large for cofactor expansion");
  const std::size_t n = m[0][0].nvars();

  // minor[mask] = det of the last popcount(mask) rows restricted to the
  // columns in mask.
  const std::uint32_t full = (std::uint32_t{1} << d) - 1;
  std::vector<Polynomial> minor(std::size_t{full} + 1, Polynomial(n));
  minor[0] = Polynomial::constant(n, 1);
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    const std::size_t row = d - static_cast<std::size_t>(std::popcount(mask));
    Polynomial acc(n);
    int rank = 0;
    for (std::size_t j = 0; j < d; ++j) {
      const std::uint32_t bit = std::uint32_t{1} << j;
      if (!(mask & bit)) continue;
      const Polynomial& entry = m[row][j];
      const Polynomial& sub = minor[mask ^ bit];
      if (!entry.is_zero() && !sub.is_zero()) {
        if (rank % 2 == 0) {
          acc += entry * sub;
        } else {
          acc -= entry * sub;
        }
      }
      ++rank;
    }
    minor[mask] = std::move(acc);
  }
  return minor[full];
}

PolyMatrix restriction_numerator_matrix(const GIndex& u, const GIndex& v) {
  if (u.d() != v.d() || u.n() != v.n()) {
    throw DimensionError("restriction: u and v from different Grassmannians");
  }
  const std::size_t d = u.d(), n = u.n();
  PolyMatrix m(d, std::vector<Polynomial>(d, Polynomial(n)));
  for (std::size_t i = 1; i <= d; ++i) {
    for (std::size_t j = 1; j <= d; ++j) {
      m[i - 1][j - 1] = mu(n, u[i] + 1, static_cast<int>(n), v[j]);
    }
  }
  return m;
}

Polynomial restrict_det(const GIndex& u, const GIndex& v) {
  if (u.d() != v.d() || u.n() != v.n()) {
    throw DimensionError("restriction: u and v from different Grassmannians");
  }
  const std::size_t d = u.d(), n = u.n();
  const int nn = static_cast<int>(n);

  // Entry (i, j) of the numerator vanishes when v_j > u_i, so the matrix is
  // block lower triangular with a split after every k where u_k < v_{k+1}.
  // Inside a block ending at row e every column j carries the common factor
  // mu(u_e + 1 .. n; v_j); it is kept as a list of linear forms so that the
  // Vandermonde factors across blocks cancel symbolically.
  struct Block {
    std::size_t first, last;
    Polynomial reduced;
  };
  std::vector<Block> blocks;
  std::vector<LinForm> forms;
  for (std::size_t s = 1; s <= d;) {
    std::size_t e = s;
    while (e < d && u[e] >= v[e + 1]) ++e;
    const int ue = u[e];
    for (std::size_t j = s; j <= e; ++j) {
      for (int k = ue + 1; k <= nn; ++k) {
        if (k == v[j]) return Polynomial(n);
        forms.emplace_back(static_cast<std::size_t>(k), static_cast<std::size_t>(v[j]));
      }
    }
    PolyMatrix m(e - s + 1, std::vector<Polynomial>(e - s + 1, Polynomial(n)));
    for (std::size_t i = s; i <= e; ++i) {
      for (std::size_t j = s; j <= e; ++j) m[i - s][j - s] = mu(n, u[i] + 1, ue, v[j]);
    }
    Polynomial reduced = det(m);
    if (reduced.is_zero()) return Polynomial(n);
    blocks.push_back({s, e, std::move(reduced)});
    s = e + 1;
  }

  auto block_of = [&](std::size_t idx) -> Block& {
    for (auto& b : blocks) {
      if (idx >= b.first && idx <= b.last) return b;
    }
    throw InternalError("restriction: column outside every block");
  };

  for (std::size_t b = 2; b <= d; ++b) {
    for (std::size_t a = 1; a < b; ++a) {
      const LinForm factor(static_cast<std::size_t>(v[b]), static_cast<std::size_t>(v[a]));
      Block& owner = block_of(a);
      if (&owner != &block_of(b)) {
        auto it = std::find(forms.begin(), forms.end(), factor);
        if (it != forms.end()) {
          forms.erase(it);
          continue;
        }
      }
      bool divided = false;
      for (Block* blk : {&owner, &block_of(b)}) {
        Polynomial q(n);
        if (try_divide_by_difference(blk->reduced, factor.hi, factor.lo, q)) {
          blk->reduced = std::move(q);
          divided = true;
          break;
        }
      }
      if (!divided) {
        throw InternalError("restriction numerator not divisible by e" + std::to_string(v[b]) +
                            " - e" + std::to_string(v[a]) + " for u=" + u.to_string() +
                            " v=" + v.to_string());
      }
    }
  }

  Polynomial value = Polynomial::constant(n, 1);
  for (const auto& b : blocks) value *= b.reduced;
  for (const auto& f : forms) value *= f.to_polynomial(n);
  return value;
}

Polynomial tangent_weight_product(const GIndex& u) {
  Polynomial out = Polynomial::constant(u.n(), 1);
  for (const auto& cell : pos_of(u)) out *= eps(u.n(), cell.r, cell.c);
  return out;
}

}  // namespace eqschubert
