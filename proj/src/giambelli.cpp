#include "eqschubert/giambelli.hpp"

#include "eqschubert/error.hpp"

namespace eqschubert {

GIndex special_index(int p, std::size_t d, std::size_t n) {
  const int nd = static_cast<int>(n - d);
  if (p < 0 || p > nd) throw InvalidArgument("special_index: p outside 0..n-d");
  Partition lambda;
  lambda.parts.assign(d, 0);
  lambda.parts[0] = p;
  return index_of(lambda, d, n);
}

EqClass special_class(int p, std::size_t d, std::size_t n) {
  if (p < 0 || p > static_cast<int>(n - d)) return EqClass(d, n);
  return schubert_class(special_index(p, d, n));
}

Polynomial giambelli_coefficient(std::size_t n, int ui, int j, int k) {
  const int lo = ui - j + 1 + k;
  if (lo < 1 || ui > static_cast<int>(n) || k < 0) {
    throw InvalidArgument("giambelli_coefficient: variable range outside 1..n");
  }
  std::vector<std::size_t> vars;
  for (int x = lo; x <= ui; ++x) vars.push_back(static_cast<std::size_t>(x));
  Polynomial h = complete_homog(n, static_cast<unsigned>(k), vars);
  return (k % 2 == 0) ? h : -h;
}

EqClass giambelli_entry(const GIndex& u, std::size_t i, std::size_t j) {
  const std::size_t d = u.d(), n = u.n();
  if (i < 1 || i > d || j < 1 || j > d) throw InvalidArgument("giambelli_entry: i, j outside 1..d");
  const int lambda_i = lambda_of(u).parts[i - 1];
  const int ui = u[i];
  const int jj = static_cast<int>(j), ii = static_cast<int>(i);
  EqClass out(d, n);
  for (int k = 0; k < jj; ++k) {
    if (ui - jj + 1 + k <= 0) continue;
    EqClass special = special_class(lambda_i + jj - ii - k, d, n);
    if (special.is_zero()) continue;
    out += special * giambelli_coefficient(n, ui, jj, k);
  }
  return out;
}

PolyMatrix giambelli_matrix_at(const GIndex& u, const GIndex& v) {
  const std::size_t d = u.d();
  PolyMatrix m(d, std::vector<Polynomial>(d, Polynomial(u.n())));
  for (std::size_t i = 1; i <= d; ++i) {
    for (std::size_t j = 1; j <= d; ++j) m[i - 1][j - 1] = giambelli_entry(u, i, j).at(v);
  }
  return m;
}

EqClass giambelli_class(const GIndex& u) {
  const std::size_t d = u.d(), n = u.n();
  std::vector<std::vector<EqClass>> entries(d);
  for (std::size_t i = 1; i <= d; ++i) {
    for (std::size_t j = 1; j <= d; ++j) entries[i - 1].push_back(giambelli_entry(u, i, j));
  }
  EqClass out(d, n);
  for (const auto& v : out.indices()) {
    PolyMatrix m(d, std::vector<Polynomial>(d, Polynomial(n)));
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) m[i][j] = entries[i][j].at(v);
    }
    out.set(v, det(m));
  }
  return out;
}

namespace {

void check_params(const HkIdentityParams& p) {
  const int n = static_cast<int>(p.n);
  if (p.n < 1 || p.j < 1 || p.m < 0 || p.m > p.j - 1) {
    throw InvalidArgument("hk identity: need j >= 1 and 0 <= m <= j-1");
  }
  if (p.ui > n || p.ui - p.j + 1 < 1) {
    throw InvalidArgument("hk identity: need 1 <= u_i - j + 1 and u_i <= n");
  }
  if (p.vs < 1 || p.vs > n) throw InvalidArgument("hk identity: v_s outside 1..n");
}

}  // namespace

Polynomial hk_identity_lhs(const HkIdentityParams& p) {
  check_params(p);
  const int n = static_cast<int>(p.n);
  Polynomial sum(p.n);
  for (int k = 0; k <= p.m; ++k) {
    sum += giambelli_coefficient(p.n, p.ui, p.j, k) * mu(p.n, p.ui - p.j + k + 2, n, p.vs);
  }
  return sum;
}

Polynomial hk_identity_rhs(const HkIdentityParams& p) {
  check_params(p);
  const int n = static_cast<int>(p.n);
  std::vector<std::size_t> vars{static_cast<std::size_t>(p.vs)};
  for (int x = p.ui - p.j + 2 + p.m; x <= p.ui; ++x) vars.push_back(static_cast<std::size_t>(x));
  Polynomial h = complete_homog(p.n, static_cast<unsigned>(p.m), vars);
  if (p.m % 2 == 1) h = -h;
  return h * mu(p.n, p.ui - p.j + p.m + 2, n, p.vs);
}

bool hk_identity_check(const HkIdentityParams& p) { return hk_identity_lhs(p) == hk_identity_rhs(p); }

}  // namespace eqschubert
