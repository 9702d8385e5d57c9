#include "eqschubert/polynomial.hpp"

#include <algorithm>
#include <cstring>
#include <string_view>
#include <unordered_map>
#include <utility>

#include "eqschubert/error.hpp"

namespace eqschubert {

namespace {

void check_var(std::size_t nvars, std::size_t var) {
  if (var < 1 || var > nvars) {
    throw InvalidArgument("variable index e" + std::to_string(var) + " outside 1.." +
                          std::to_string(nvars));
  }
}

void check_exponent(unsigned e) {
  if (e > Monomial::kMaxExponent) throw InvalidArgument("monomial exponent overflow");
}

}  // namespace

// ---------------------------------------------------------------------------
// Monomial

Monomial::Monomial(std::size_t nvars) {
  if (nvars > kMaxVars) {
    throw InvalidArgument("at most " + std::to_string(kMaxVars) + " variables supported");
  }
  nvars_ = static_cast<std::uint8_t>(nvars);
}

Monomial::Monomial(std::size_t nvars, std::span<const unsigned> exponents) : Monomial(nvars) {
  if (exponents.size() != nvars) throw DimensionError("exponent vector length mismatch");
  unsigned deg = 0;
  for (std::size_t i = 0; i < nvars; ++i) {
    check_exponent(exponents[i]);
    exps_[i] = static_cast<std::uint8_t>(exponents[i]);
    deg += exponents[i];
  }
  degree_ = static_cast<std::uint16_t>(deg);
}

unsigned Monomial::exponent(std::size_t var) const {
  check_var(nvars_, var);
  return exps_[var - 1];
}

std::vector<unsigned> Monomial::exponents() const {
  return std::vector<unsigned>(exps_.begin(), exps_.begin() + nvars_);
}

void Monomial::raise(std::size_t var, unsigned power) {
  check_var(nvars_, var);
  check_exponent(exps_[var - 1] + power);
  exps_[var - 1] = static_cast<std::uint8_t>(exps_[var - 1] + power);
  degree_ = static_cast<std::uint16_t>(degree_ + power);
}

Monomial Monomial::times(const Monomial& other) const {
  if (nvars_ != other.nvars_) throw DimensionError("monomial ambient mismatch");
  Monomial out = *this;
  for (std::size_t i = 0; i < nvars_; ++i) {
    unsigned e = unsigned{exps_[i]} + other.exps_[i];
    check_exponent(e);
    out.exps_[i] = static_cast<std::uint8_t>(e);
  }
  out.degree_ = static_cast<std::uint16_t>(degree_ + other.degree_);
  return out;
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < nvars_; ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

Monomial Monomial::quotient_of(const Monomial& other) const {
  Monomial out = other;
  for (std::size_t i = 0; i < nvars_; ++i) out.exps_[i] = other.exps_[i] - exps_[i];
  out.degree_ = static_cast<std::uint16_t>(other.degree_ - degree_);
  return out;
}

Monomial Monomial::without(std::size_t var) const {
  Monomial out = *this;
  out.degree_ = static_cast<std::uint16_t>(degree_ - exps_[var - 1]);
  out.exps_[var - 1] = 0;
  return out;
}

std::size_t Monomial::hash() const {
  // FNV-1a over the used exponent bytes.
  std::uint64_t h = 1469598103934665603ull;
  for (std::size_t i = 0; i < nvars_; ++i) {
    h ^= exps_[i];
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

bool GradedLexGreater::operator()(const Monomial& a, const Monomial& b) const {
  if (a.degree_ != b.degree_) return a.degree_ > b.degree_;
  for (std::size_t i = a.nvars_; i-- > 0;) {
    if (a.exps_[i] != b.exps_[i]) return a.exps_[i] > b.exps_[i];
  }
  return false;
}

// ---------------------------------------------------------------------------
// Polynomial

Polynomial::Polynomial(std::size_t nvars) : nvars_(nvars) {
  if (nvars > Monomial::kMaxVars) {
    throw InvalidArgument("at most " + std::to_string(Monomial::kMaxVars) +
                          " variables supported");
  }
}

Polynomial Polynomial::constant(std::size_t nvars, const Integer& c) {
  Polynomial p(nvars);
  if (c != 0) p.terms_.push_back({Monomial(nvars), c});
  return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t var) {
  Monomial m(nvars);
  m.raise(var);
  return monomial(m);
}

Polynomial Polynomial::difference(std::size_t nvars, std::size_t hi, std::size_t lo) {
  return variable(nvars, hi) - variable(nvars, lo);
}

Polynomial Polynomial::monomial(const Monomial& m, const Integer& c) {
  Polynomial p(m.nvars());
  if (c != 0) p.terms_.push_back({m, c});
  return p;
}

Polynomial Polynomial::from_terms(std::size_t nvars, std::vector<Term> terms) {
  Polynomial p(nvars);
  for (const auto& t : terms) {
    if (t.mono.nvars() != nvars) throw DimensionError("term ambient mismatch");
  }
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return GradedLexGreater{}(a.mono, b.mono); });
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff += t.coeff;
    } else {
      p.terms_.push_back(std::move(t));
    }
  }
  std::erase_if(p.terms_, [](const Term& t) { return t.coeff == 0; });
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.front().mono.is_one());
}

Integer Polynomial::constant_term() const {
  if (!terms_.empty() && terms_.back().mono.is_one()) return terms_.back().coeff;
  return 0;
}

int Polynomial::degree() const {
  return terms_.empty() ? -1 : static_cast<int>(terms_.front().mono.degree());
}

bool Polynomial::is_homogeneous() const {
  return terms_.empty() || terms_.front().mono.degree() == terms_.back().mono.degree();
}

void Polynomial::check_same(const Polynomial& other) const {
  if (nvars_ != other.nvars_) {
    throw DimensionError("polynomial ambient mismatch: " + std::to_string(nvars_) + " vs " +
                         std::to_string(other.nvars_));
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& t : out.terms_) t.coeff = -t.coeff;
  return out;
}

namespace {

template <typename Combine>
std::vector<Term> merge_terms(const std::vector<Term>& a, const std::vector<Term>& b,
                              Combine combine) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  GradedLexGreater greater;
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && greater(a[i].mono, b[j].mono))) {
      out.push_back(a[i++]);
    } else if (i == a.size() || greater(b[j].mono, a[i].mono)) {
      out.push_back({b[j].mono, combine(Integer(0), b[j].coeff)});
      ++j;
    } else {
      Integer c = combine(a[i].coeff, b[j].coeff);
      if (c != 0) out.push_back({a[i].mono, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  check_same(other);
  if (other.terms_.empty()) return *this;
  terms_ = merge_terms(terms_, other.terms_,
                       [](const Integer& x, const Integer& y) { return Integer(x + y); });
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  check_same(other);
  if (other.terms_.empty()) return *this;
  terms_ = merge_terms(terms_, other.terms_,
                       [](const Integer& x, const Integer& y) { return Integer(x - y); });
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
  *this = *this * other;
  return *this;
}

Polynomial& Polynomial::operator*=(const Integer& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& t : terms_) t.coeff *= c;
  }
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_same(b);
  Polynomial out(a.nvars_);
  if (a.is_zero() || b.is_zero()) return out;
  if (a.is_constant()) return Polynomial(b) *= a.terms_.front().coeff;
  if (b.is_constant()) return Polynomial(a) *= b.terms_.front().coeff;

  std::unordered_map<Monomial, Integer, MonomialHash> acc;
  acc.reserve(a.size() * b.size());
  Integer prod;
  for (const auto& ta : a.terms_) {
    for (const auto& tb : b.terms_) {
      prod = ta.coeff * tb.coeff;
      auto [it, inserted] = acc.try_emplace(ta.mono.times(tb.mono));
      it->second += prod;
    }
  }
  out.terms_.reserve(acc.size());
  for (auto& [m, c] : acc) {
    if (c != 0) out.terms_.push_back({m, std::move(c)});
  }
  std::sort(out.terms_.begin(), out.terms_.end(),
            [](const Term& x, const Term& y) { return GradedLexGreater{}(x.mono, y.mono); });
  return out;
}

Polynomial Polynomial::pow(unsigned k) const {
  Polynomial result = constant(nvars_, 1);
  Polynomial base = *this;
  while (k > 0) {
    if (k & 1u) result *= base;
    k >>= 1u;
    if (k > 0) base *= base;
  }
  return result;
}

Polynomial Polynomial::times_variable(std::size_t var) const {
  check_var(nvars_, var);
  Polynomial out(nvars_);
  out.terms_.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m = t.mono;
    m.raise(var);
    out.terms_.push_back({m, t.coeff});
  }
  std::sort(out.terms_.begin(), out.terms_.end(),
            [](const Term& x, const Term& y) { return GradedLexGreater{}(x.mono, y.mono); });
  return out;
}

Integer Polynomial::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(
      terms_.begin(), terms_.end(), m,
      [](const Term& t, const Monomial& key) { return GradedLexGreater{}(t.mono, key); });
  if (it != terms_.end() && it->mono == m) return it->coeff;
  return 0;
}

Polynomial add(const Polynomial& a, const Polynomial& b) { return a + b; }
Polynomial mul(const Polynomial& a, const Polynomial& b) { return a * b; }

// ---------------------------------------------------------------------------
// Division

bool try_divide_by_difference(const Polynomial& a, std::size_t hi, std::size_t lo,
                              Polynomial& quotient) {
  const std::size_t n = a.nvars();
  check_var(n, hi);
  check_var(n, lo);
  if (hi == lo) throw DivisionByZero("division by e" + std::to_string(hi) + " - e" +
                                     std::to_string(lo));
  if (a.is_zero()) {
    quotient = Polynomial(n);
    return true;
  }

  // a = sum_k x^k a_k with x = e_hi and a_k free of x.
  unsigned top = 0;
  for (const auto& t : a.terms()) top = std::max(top, t.mono.exponent(hi));
  if (top == 0) return false;
  std::vector<std::vector<Term>> slices(top + 1);
  for (const auto& t : a.terms()) {
    slices[t.mono.exponent(hi)].push_back({t.mono.without(hi), t.coeff});
  }
  std::vector<Polynomial> coeff(top + 1, Polynomial(n));
  for (unsigned k = 0; k <= top; ++k) coeff[k] = Polynomial::from_terms(n, std::move(slices[k]));

  // (x - y) q = a with q = sum_k x^k q_k:  q_{k-1} = a_k + y q_k.
  std::vector<Polynomial> q(top, Polynomial(n));
  q[top - 1] = coeff[top];
  for (unsigned k = top - 1; k >= 1; --k) q[k - 1] = coeff[k] + q[k].times_variable(lo);
  Polynomial remainder = coeff[0] + q[0].times_variable(lo);
  if (!remainder.is_zero()) return false;

  std::vector<Term> terms;
  for (unsigned k = 0; k < top; ++k) {
    for (const auto& t : q[k].terms()) {
      Monomial m = t.mono;
      if (k > 0) m.raise(hi, k);
      terms.push_back({m, t.coeff});
    }
  }
  quotient = Polynomial::from_terms(n, std::move(terms));
  return true;
}

namespace {

// Recognises b = e_hi - e_lo (as an exact two-term polynomial).
bool as_difference(const Polynomial& b, std::size_t& hi, std::size_t& lo) {
  if (b.size() != 2) return false;
  const auto& t0 = b.terms()[0];
  const auto& t1 = b.terms()[1];
  if (t0.mono.degree() != 1 || t1.mono.degree() != 1) return false;
  if (!((t0.coeff == 1 && t1.coeff == -1) || (t0.coeff == -1 && t1.coeff == 1))) return false;
  auto var_of = [&](const Monomial& m) {
    for (std::size_t v = 1; v <= b.nvars(); ++v) {
      if (m.exponent(v) == 1) return v;
    }
    return std::size_t{0};
  };
  std::size_t v0 = var_of(t0.mono), v1 = var_of(t1.mono);
  if (t0.coeff == 1) {
    hi = v0;
    lo = v1;
  } else {
    hi = v1;
    lo = v0;
  }
  return true;
}

}  // namespace

Polynomial exact_div(const Polynomial& a, const Polynomial& b) {
  if (a.nvars() != b.nvars()) throw DimensionError("exact_div: ambient mismatch");
  if (b.is_zero()) throw DivisionByZero("exact_div: division by zero polynomial");
  const std::size_t n = a.nvars();
  if (a.is_zero()) return Polynomial(n);

  std::size_t hi = 0, lo = 0;
  if (as_difference(b, hi, lo)) {
    Polynomial q(n);
    if (!try_divide_by_difference(a, hi, lo, q)) {
      throw NotDivisible("exact_div: " + to_string(b) + " does not divide the dividend");
    }
    return q;
  }

  // Multivariate long division in the canonical order. With exact division
  // LT(b) must divide LT(remainder) at every step.
  std::map<Monomial, Integer, GradedLexGreater> rem;
  for (const auto& t : a.terms()) rem.emplace(t.mono, t.coeff);
  const Term& lead = b.leading_term();
  std::vector<Term> quotient;
  while (!rem.empty()) {
    auto it = rem.begin();
    if (!lead.mono.divides(it->first) || !mpz_divisible_p(it->second.get_mpz_t(),
                                                          lead.coeff.get_mpz_t())) {
      throw NotDivisible("exact_div: " + to_string(b) + " does not divide the dividend");
    }
    Monomial qm = lead.mono.quotient_of(it->first);
    Integer qc = it->second / lead.coeff;
    for (const auto& t : b.terms()) {
      Monomial m = qm.times(t.mono);
      auto [pos, inserted] = rem.try_emplace(m, 0);
      pos->second -= qc * t.coeff;
      if (pos->second == 0) rem.erase(pos);
    }
    quotient.push_back({qm, std::move(qc)});
  }
  return Polynomial::from_terms(n, std::move(quotient));
}

// ---------------------------------------------------------------------------
// Substitution

Polynomial substitute(const Polynomial& p, const std::map<std::size_t, Polynomial>& assignment) {
  const std::size_t n = p.nvars();
  for (const auto& [var, value] : assignment) {
    check_var(n, var);
    if (value.nvars() != n) throw DimensionError("substitute: value ambient mismatch");
  }
  std::map<std::pair<std::size_t, unsigned>, Polynomial> powers;
  auto power_of = [&](std::size_t var, unsigned e) -> const Polynomial& {
    auto key = std::make_pair(var, e);
    auto it = powers.find(key);
    if (it == powers.end()) it = powers.emplace(key, assignment.at(var).pow(e)).first;
    return it->second;
  };

  Polynomial out(n);
  for (const auto& t : p.terms()) {
    Monomial kept = t.mono;
    Polynomial factor = Polynomial::constant(n, t.coeff);
    for (const auto& [var, value] : assignment) {
      unsigned e = t.mono.exponent(var);
      if (e == 0) continue;
      kept = kept.without(var);
      factor *= power_of(var, e);
      if (factor.is_zero()) break;
    }
    if (factor.is_zero()) continue;
    out += factor * Polynomial::monomial(kept);
  }
  return out;
}

Polynomial substitute(const Polynomial& p, const std::map<std::size_t, Integer>& assignment) {
  std::map<std::size_t, Polynomial> as_polys;
  for (const auto& [var, value] : assignment) {
    as_polys.emplace(var, Polynomial::constant(p.nvars(), value));
  }
  return substitute(p, as_polys);
}

Polynomial specialize_zero(const Polynomial& p) {
  return Polynomial::constant(p.nvars(), p.constant_term());
}

// ---------------------------------------------------------------------------
// Complete homogeneous symmetric polynomials

Polynomial complete_homog(std::size_t nvars, unsigned k, std::span<const std::size_t> vars) {
  if (k == 0) return Polynomial::constant(nvars, 1);
  if (vars.empty()) throw InvalidArgument("complete_homog: h_k with k > 0 needs variables");
  for (auto v : vars) check_var(nvars, v);

  // Enumerate multisets of argument positions i_1 <= ... <= i_k.
  std::vector<Term> terms;
  std::vector<std::size_t> pick(k, 0);
  const std::size_t m = vars.size();
  while (true) {
    Monomial mono(nvars);
    for (auto i : pick) mono.raise(vars[i]);
    terms.push_back({mono, 1});
    std::size_t pos = k;
    while (pos > 0 && pick[pos - 1] == m - 1) --pos;
    if (pos == 0) break;
    ++pick[pos - 1];
    for (std::size_t r = pos; r < k; ++r) pick[r] = pick[pos - 1];
  }
  return Polynomial::from_terms(nvars, std::move(terms));
}

// ---------------------------------------------------------------------------
// Rendering

std::string to_string(const Monomial& m) {
  std::string out;
  for (std::size_t v = 1; v <= m.nvars(); ++v) {
    unsigned e = m.exponent(v);
    if (e == 0) continue;
    if (!out.empty()) out += '*';
    out += 'e';
    out += std::to_string(v);
    if (e > 1) {
      out += '^';
      out += std::to_string(e);
    }
  }
  return out.empty() ? "1" : out;
}

std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : p.terms()) {
    Integer mag = abs(t.coeff);
    bool negative = t.coeff < 0;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (t.mono.is_one()) {
      out += mag.get_str();
    } else {
      if (mag != 1) {
        out += mag.get_str();
        out += '*';
      }
      out += to_string(t.mono);
    }
  }
  return out;
}

}  // namespace eqschubert
