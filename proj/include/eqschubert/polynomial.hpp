#pragma once

// Exact sparse multivariate polynomials over Z in the variables e1..en.

#include <gmpxx.h>

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace eqschubert {

using Integer = mpz_class;

/// Exponent vector of a monomial in e1..en. Stored inline; n is capped at
/// kMaxVars and each exponent at kMaxExponent.
class Monomial {
 public:
  static constexpr std::size_t kMaxVars = 32;
  static constexpr unsigned kMaxExponent = 255;

  Monomial() = default;
  explicit Monomial(std::size_t nvars);
  Monomial(std::size_t nvars, std::span<const unsigned> exponents);

  std::size_t nvars() const { return nvars_; }
  unsigned degree() const { return degree_; }

  /// Exponent of e_var, var in 1..n.
  unsigned exponent(std::size_t var) const;
  std::vector<unsigned> exponents() const;

  /// Multiplies in e_var^power.
  void raise(std::size_t var, unsigned power = 1);
  /// Returns this * other. Both must share nvars.
  Monomial times(const Monomial& other) const;
  bool divides(const Monomial& other) const;
  /// other / this; requires divides(other).
  Monomial quotient_of(const Monomial& other) const;
  /// Copy with the exponent of e_var set to zero.
  Monomial without(std::size_t var) const;

  bool is_one() const { return degree_ == 0; }

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.nvars_ == b.nvars_ && a.exps_ == b.exps_;
  }

  std::size_t hash() const;

 private:
  friend struct GradedLexGreater;
  std::array<std::uint8_t, kMaxVars> exps_{};
  std::uint16_t degree_ = 0;
  std::uint8_t nvars_ = 0;
};

/// Canonical term order: higher total degree first; ties broken by the
/// exponent of e_n, then e_{n-1}, ..., higher exponent first.
struct GradedLexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

struct Term {
  Monomial mono;
  Integer coeff;

  friend bool operator==(const Term& a, const Term& b) {
    return a.mono == b.mono && a.coeff == b.coeff;
  }
};

class Polynomial {
 public:
  /// Zero polynomial in `nvars` variables.
  explicit Polynomial(std::size_t nvars = 0);

  static Polynomial constant(std::size_t nvars, const Integer& c);
  /// The variable e_var.
  static Polynomial variable(std::size_t nvars, std::size_t var);
  /// e_hi - e_lo.
  static Polynomial difference(std::size_t nvars, std::size_t hi, std::size_t lo);
  static Polynomial monomial(const Monomial& m, const Integer& c = 1);
  /// Builds from arbitrary (possibly repeated, unsorted, zero) terms.
  static Polynomial from_terms(std::size_t nvars, std::vector<Term> terms);

  std::size_t nvars() const { return nvars_; }
  /// Terms in canonical order, no zero coefficients.
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Constant coefficient (the value at e = 0).
  Integer constant_term() const;
  /// Total degree; -1 for the zero polynomial.
  int degree() const;
  /// True for zero and for polynomials whose terms share one total degree.
  bool is_homogeneous() const;
  const Term& leading_term() const { return terms_.front(); }

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  Polynomial& operator*=(const Integer& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Integer& c) { return a *= c; }
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  Polynomial pow(unsigned k) const;
  /// Multiplies by e_var (an exponent shift; no reordering cost beyond a sort).
  Polynomial times_variable(std::size_t var) const;

  /// Coefficient of `m`, zero if absent.
  Integer coefficient(const Monomial& m) const;

 private:
  void check_same(const Polynomial& other) const;
  std::size_t nvars_;
  std::vector<Term> terms_;
};

/// Exact sum/product as free functions.
Polynomial add(const Polynomial& a, const Polynomial& b);
Polynomial mul(const Polynomial& a, const Polynomial& b);

/// Returns q with q * b == a. Throws DivisionByZero for b == 0 and
/// NotDivisible when no such q exists.
Polynomial exact_div(const Polynomial& a, const Polynomial& b);

/// a / (e_hi - e_lo) by synthetic division in e_hi. Returns false (and leaves
/// `quotient` untouched) when the division is not exact.
bool try_divide_by_difference(const Polynomial& a, std::size_t hi, std::size_t lo,
                              Polynomial& quotient);

/// Replaces e_var by assignment[var] for every listed var; others are kept.
Polynomial substitute(const Polynomial& p, const std::map<std::size_t, Polynomial>& assignment);
Polynomial substitute(const Polynomial& p, const std::map<std::size_t, Integer>& assignment);

/// Sets every variable to zero (the non-equivariant shadow).
Polynomial specialize_zero(const Polynomial& p);

/// h_k(e_{vars[0]}, e_{vars[1]}, ...): sum of all degree-k monomials in the
/// listed variables, each with coefficient 1. Repeated indices are allowed
/// and count as separate arguments.
Polynomial complete_homog(std::size_t nvars, unsigned k, std::span<const std::size_t> vars);

/// Text form: terms in canonical order, e.g. "e2^2 - 2*e1*e2 + e1^2".
std::string to_string(const Polynomial& p);
std::string to_string(const Monomial& m);

}  // namespace eqschubert
