#include "eqschubert/gkm.hpp"

#include <algorithm>
#include <exception>
#include <optional>
#include <thread>

#include "eqschubert/error.hpp"
#include "eqschubert/restriction.hpp"

namespace eqschubert {

namespace {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Runs body(i) for i in [0, count) on up to `jobs` threads.
template <typename Body>
void parallel_for(std::size_t count, unsigned jobs, Body body) {
  if (jobs <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::vector<std::exception_ptr> errors(jobs);
  {
    std::vector<std::jthread> workers;
    for (unsigned t = 0; t < jobs; ++t) {
      workers.emplace_back([&, t] {
        try {
          for (std::size_t i = t; i < count; i += jobs) body(i);
        } catch (...) {
          errors[t] = std::current_exception();
        }
      });
    }
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace

std::size_t index_position(const GIndex& v) {
  const std::size_t d = v.d(), n = v.n();
  std::size_t rank = 0;
  int prev = 0;
  for (std::size_t i = 1; i <= d; ++i) {
    for (int x = prev + 1; x < v[i]; ++x) rank += binomial(n - x, d - i);
    prev = v[i];
  }
  return rank;
}

// ---------------------------------------------------------------------------
// EqClass

EqClass::EqClass(std::size_t d, std::size_t n)
    : d_(d),
      n_(n),
      indices_(std::make_shared<const std::vector<GIndex>>(all_indices(d, n))),
      values_(indices_->size(), Polynomial(n)) {}

EqClass EqClass::identity(std::size_t d, std::size_t n) {
  EqClass out(d, n);
  for (auto& p : out.values_) p = Polynomial::constant(n, 1);
  return out;
}

const Polynomial& EqClass::at(const GIndex& v) const {
  if (v.d() != d_ || v.n() != n_) throw DimensionError("EqClass: index from another Gr(d,n)");
  return values_[index_position(v)];
}

void EqClass::set(const GIndex& v, Polynomial value) {
  if (v.d() != d_ || v.n() != n_) throw DimensionError("EqClass: index from another Gr(d,n)");
  if (value.nvars() != n_) throw DimensionError("EqClass: restriction in the wrong ring");
  values_[index_position(v)] = std::move(value);
}

bool EqClass::is_zero() const {
  return std::all_of(values_.begin(), values_.end(), [](const Polynomial& p) { return p.is_zero(); });
}

void EqClass::check_same(const EqClass& other) const {
  if (d_ != other.d_ || n_ != other.n_) throw DimensionError("EqClass: ambient mismatch");
}

EqClass& EqClass::operator+=(const EqClass& other) {
  check_same(other);
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += other.values_[i];
  return *this;
}

EqClass& EqClass::operator-=(const EqClass& other) {
  check_same(other);
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= other.values_[i];
  return *this;
}

EqClass& EqClass::operator*=(const EqClass& other) {
  check_same(other);
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] *= other.values_[i];
  return *this;
}

EqClass& EqClass::operator*=(const Polynomial& scalar) {
  for (auto& p : values_) p *= scalar;
  return *this;
}

EqClass schubert_class(const GIndex& u) {
  EqClass out(u.d(), u.n());
  for (const auto& v : out.indices()) out.set(v, restrict_det(u, v));
  return out;
}

SchubertBasis::SchubertBasis(std::size_t d, std::size_t n, unsigned jobs)
    : d_(d), n_(n), indices_(all_indices(d, n)) {
  std::vector<std::optional<EqClass>> slots(indices_.size());
  parallel_for(indices_.size(), jobs, [&](std::size_t i) { slots[i] = schubert_class(indices_[i]); });
  classes_.reserve(slots.size());
  for (auto& s : slots) classes_.push_back(std::move(*s));
}

const EqClass& SchubertBasis::operator[](const GIndex& u) const {
  if (u.d() != d_ || u.n() != n_) throw DimensionError("SchubertBasis: index from another Gr(d,n)");
  return classes_[index_position(u)];
}

const Polynomial& SchubertBasis::restriction(const GIndex& u, const GIndex& v) const {
  return (*this)[u].at(v);
}

// ---------------------------------------------------------------------------
// GKM condition

GkmReport gkm_check(const EqClass& a) {
  GkmReport report;
  const int n = static_cast<int>(a.n());
  for (const auto& w : a.indices()) {
    for (int i : w.entries()) {
      for (int j = i + 1; j <= n; ++j) {
        if (w.contains(j)) continue;
        std::vector<int> e = w.entries();
        std::replace(e.begin(), e.end(), i, j);
        std::sort(e.begin(), e.end());
        GIndex x(a.n(), std::move(e));
        Polynomial diff = a.at(x) - a.at(w);
        Polynomial q(a.n());
        if (!try_divide_by_difference(diff, static_cast<std::size_t>(j),
                                      static_cast<std::size_t>(i), q)) {
          report.ok = false;
          report.violations.push_back({w, x, i, j});
        }
      }
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// Basis expansion

Expansion expand(const EqClass& a, const SchubertBasis& basis) {
  if (a.d() != basis.d() || a.n() != basis.n()) throw DimensionError("expand: ambient mismatch");
  Expansion coeffs;
  EqClass residual = a;
  const auto& idx = a.indices();
  for (std::size_t round = 0; round <= idx.size(); ++round) {
    std::vector<const GIndex*> support;
    for (std::size_t i = 0; i < idx.size(); ++i) {
      if (!residual.restrictions()[i].is_zero()) support.push_back(&idx[i]);
    }
    if (support.empty()) return coeffs;

    // Lexicographically first <=-maximal element of the support.
    const GIndex* top = nullptr;
    for (const GIndex* w : support) {
      bool maximal = std::none_of(support.begin(), support.end(),
                                  [&](const GIndex* x) { return less(*w, *x); });
      if (maximal) {
        top = w;
        break;
      }
    }
    if (coeffs.count(*top)) throw NotInSpan("expand: residual reappeared at " + top->to_string());
    Polynomial c(a.n());
    try {
      c = exact_div(residual.at(*top), basis.restriction(*top, *top));
    } catch (const NotDivisible&) {
      throw NotInSpan("expand: restriction at " + top->to_string() +
                      " is not a multiple of [X(w)]|_w");
    }
    residual -= basis[*top] * c;
    coeffs.emplace(*top, std::move(c));
  }
  throw NotInSpan("expand: residual did not clear");
}

Expansion expand(const EqClass& a) { return expand(a, SchubertBasis(a.d(), a.n())); }

Expansion struct_consts_solve(const GIndex& u, const GIndex& v, const SchubertBasis& basis) {
  try {
    return expand(basis[u] * basis[v], basis);
  } catch (const NotInSpan& e) {
    throw InternalError(std::string("product of Schubert classes outside their span: ") + e.what());
  }
}

Expansion struct_consts_solve(const GIndex& u, const GIndex& v) {
  return struct_consts_solve(u, v, SchubertBasis(u.d(), u.n()));
}

// ---------------------------------------------------------------------------
// Chain formula

namespace {

GIndex meet(const GIndex& u, const GIndex& v) {
  std::vector<int> e(u.d());
  for (std::size_t i = 0; i < u.d(); ++i) e[i] = std::min(u.entries()[i], v.entries()[i]);
  return GIndex(u.n(), std::move(e));
}

// Elements y with w <= y <= top, in lexicographic order.
std::vector<GIndex> interval(const GIndex& w, const GIndex& top) {
  std::vector<GIndex> out;
  for (auto& y : all_indices(w.d(), w.n())) {
    if (leq(w, y) && leq(y, top)) out.push_back(std::move(y));
  }
  return out;
}

class ChainWalker {
 public:
  ChainWalker(const GIndex& u, const GIndex& v, const GIndex& w, const SchubertBasis& basis,
              const ChainOptions& opts)
      : u_(u), v_(v), basis_(basis), opts_(opts), elems_(interval(w, meet(u, v))), sum_(u.n()) {
    for (const auto& y : elems_) {
      const Polynomial& self = basis_.restriction(y, y);
      if (self != tangent_weight_product(y)) {
        throw InternalError("[X(y)]|_y is not the product of its tangent weights for y=" +
                            y.to_string());
      }
      std::vector<LinForm> forms;
      for (const auto& cell : pos_of(y)) {
        forms.emplace_back(static_cast<std::size_t>(cell.r), static_cast<std::size_t>(cell.c));
      }
      inverse_self_.push_back(LinFraction(Polynomial::constant(u.n(), 1), std::move(forms)));
    }
  }

  LinFraction run() {
    walk(0, LinFraction(Polynomial::constant(u_.n(), 1)), 0);
    return sum_;
  }

 private:
  // `prefix` is prod_{t=1..k} [X(y_t)]|_{y_{t-1}} / [X(y_{t-1})]|_{y_{t-1}}.
  void walk(std::size_t at, const LinFraction& prefix, std::size_t k) {
    if (++visited_ > opts_.max_chains) {
      throw InvalidArgument("chain enumeration exceeded the limit of " +
                            std::to_string(opts_.max_chains) + " chains");
    }
    const GIndex& y = elems_[at];
    LinFraction leading(basis_.restriction(u_, y) * basis_.restriction(v_, y));
    LinFraction term = frac_mul(frac_mul(prefix, leading), inverse_self_[at]);
    sum_ = (k % 2 == 0) ? frac_add(sum_, term) : frac_sub(sum_, term);
    for (std::size_t next = at + 1; next < elems_.size(); ++next) {
      if (!less(y, elems_[next])) continue;
      LinFraction step(basis_.restriction(elems_[next], y));
      walk(next, frac_mul(frac_mul(prefix, step), inverse_self_[at]), k + 1);
    }
  }

  const GIndex& u_;
  const GIndex& v_;
  const SchubertBasis& basis_;
  ChainOptions opts_;
  std::vector<GIndex> elems_;
  std::vector<LinFraction> inverse_self_;
  LinFraction sum_;
  std::size_t visited_ = 0;
};

}  // namespace

Polynomial struct_const_chain(const GIndex& u, const GIndex& v, const GIndex& w,
                              const SchubertBasis& basis, const ChainOptions& opts) {
  if (u.n() > opts.max_n) {
    throw InvalidArgument("chain method limited to n <= " + std::to_string(opts.max_n));
  }
  if (!leq(w, u) || !leq(w, v)) return Polynomial(u.n());
  LinFraction value = normalize(ChainWalker(u, v, w, basis, opts).run());
  if (!value.is_polynomial()) {
    throw NotPolynomial("chain formula left denominator " + to_string(value) + " for u=" +
                        u.to_string() + " v=" + v.to_string() + " w=" + w.to_string());
  }
  return value.numerator();
}

Polynomial struct_const_chain(const GIndex& u, const GIndex& v, const GIndex& w,
                              const ChainOptions& opts) {
  return struct_const_chain(u, v, w, SchubertBasis(u.d(), u.n()), opts);
}

std::size_t chain_count(const GIndex& u, const GIndex& v, const GIndex& w) {
  if (!leq(w, u) || !leq(w, v)) return 0;
  std::vector<GIndex> elems = interval(w, meet(u, v));
  std::vector<std::size_t> from(elems.size(), 0);
  for (std::size_t i = elems.size(); i-- > 0;) {
    from[i] = 1;
    for (std::size_t j = i + 1; j < elems.size(); ++j) {
      if (less(elems[i], elems[j])) from[i] += from[j];
    }
  }
  return from.front();
}

std::vector<StructConstEntry> struct_const_table(std::size_t d, std::size_t n,
                                                 StructConstMethod method, unsigned jobs,
                                                 const ChainOptions& opts) {
  SchubertBasis basis(d, n, jobs);
  const auto& idx = basis.indices();
  const std::size_t m = idx.size();
  std::vector<std::vector<StructConstEntry>> rows(m * m);
  parallel_for(m * m, jobs, [&](std::size_t k) {
    const GIndex& u = idx[k / m];
    const GIndex& v = idx[k % m];
    auto& out = rows[k];
    if (method == StructConstMethod::solve) {
      for (auto& [w, c] : struct_consts_solve(u, v, basis)) out.push_back({u, v, w, c});
    } else {
      for (const auto& w : idx) {
        if (!leq(w, u) || !leq(w, v)) continue;
        Polynomial c = struct_const_chain(u, v, w, basis, opts);
        if (!c.is_zero()) out.push_back({u, v, w, std::move(c)});
      }
    }
  });
  std::vector<StructConstEntry> table;
  for (auto& r : rows) {
    for (auto& e : r) table.push_back(std::move(e));
  }
  return table;
}

// ---------------------------------------------------------------------------
// Simple-root coordinates

Polynomial to_simple_root_coordinates(const Polynomial& p) {
  const std::size_t n = p.nvars();
  std::map<std::size_t, Polynomial> assignment;
  Polynomial partial(n);
  for (std::size_t i = 1; i <= n; ++i) {
    assignment.emplace(i, partial);
    if (i < n) partial += Polynomial::variable(n, i);
  }
  return substitute(p, assignment);
}

bool is_graham_positive(const Polynomial& p) {
  const Polynomial y = to_simple_root_coordinates(p);
  return std::all_of(y.terms().begin(), y.terms().end(),
                     [](const Term& t) { return t.coeff > 0; });
}

}  // namespace eqschubert
