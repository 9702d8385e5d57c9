#include "eqschubert/linfraction.hpp"

#include <algorithm>
#include <map>

#include "eqschubert/error.hpp"

namespace eqschubert {

LinForm::LinForm(std::size_t hi_, std::size_t lo_) : hi(hi_), lo(lo_) {
  if (hi == lo) throw InvalidArgument("linear form e_i - e_i is zero");
}

Polynomial LinForm::to_polynomial(std::size_t nvars) const {
  return Polynomial::difference(nvars, hi, lo);
}

LinFraction::LinFraction(Polynomial numerator, std::vector<LinForm> denominators)
    : numerator_(std::move(numerator)) {
  for (auto& f : denominators) {
    if (f.hi == f.lo) throw DivisionByZero("linear form e_i - e_i in denominator");
    if (f.hi < f.lo) {
      std::swap(f.hi, f.lo);
      numerator_ = -numerator_;
    }
  }
  std::sort(denominators.begin(), denominators.end());
  denominators_ = std::move(denominators);
}

Polynomial LinFraction::denominator_product() const {
  Polynomial p = Polynomial::constant(nvars(), 1);
  for (const auto& f : denominators_) p *= f.to_polynomial(nvars());
  return p;
}

LinFraction normalize(const LinFraction& f) {
  LinFraction out = f;
  if (out.numerator_.is_zero()) {
    out.denominators_.clear();
    return out;
  }
  std::vector<LinForm> kept;
  for (const auto& form : out.denominators_) {
    Polynomial q(out.nvars());
    if (try_divide_by_difference(out.numerator_, form.hi, form.lo, q)) {
      out.numerator_ = std::move(q);
    } else {
      kept.push_back(form);
    }
  }
  out.denominators_ = std::move(kept);
  return out;
}

namespace {

std::map<LinForm, int> counts(const std::vector<LinForm>& forms) {
  std::map<LinForm, int> c;
  for (const auto& f : forms) ++c[f];
  return c;
}

// Brings a and b over the least common multiple of their denominators.
void common_denominator(const LinFraction& a, const LinFraction& b, Polynomial& num_a,
                        Polynomial& num_b, std::vector<LinForm>& den) {
  if (a.nvars() != b.nvars()) throw DimensionError("LinFraction ambient mismatch");
  const std::size_t n = a.nvars();
  auto ca = counts(a.denominators());
  auto cb = counts(b.denominators());
  num_a = a.numerator();
  num_b = b.numerator();
  den.clear();
  std::map<LinForm, int> all = ca;
  for (const auto& [f, k] : cb) all[f] = std::max(all[f], k);
  for (const auto& [f, k] : all) {
    for (int i = 0; i < k; ++i) den.push_back(f);
    for (int i = ca[f]; i < k; ++i) num_a *= f.to_polynomial(n);
    for (int i = cb[f]; i < k; ++i) num_b *= f.to_polynomial(n);
  }
}

}  // namespace

LinFraction frac_add(const LinFraction& a, const LinFraction& b) {
  Polynomial na, nb;
  std::vector<LinForm> den;
  common_denominator(a, b, na, nb, den);
  return normalize(LinFraction(na + nb, std::move(den)));
}

LinFraction frac_sub(const LinFraction& a, const LinFraction& b) {
  Polynomial na, nb;
  std::vector<LinForm> den;
  common_denominator(a, b, na, nb, den);
  return normalize(LinFraction(na - nb, std::move(den)));
}

LinFraction frac_mul(const LinFraction& a, const LinFraction& b) {
  if (a.nvars() != b.nvars()) throw DimensionError("LinFraction ambient mismatch");
  std::vector<LinForm> den = a.denominators();
  den.insert(den.end(), b.denominators().begin(), b.denominators().end());
  return normalize(LinFraction(a.numerator() * b.numerator(), std::move(den)));
}

bool same_value(const LinFraction& a, const LinFraction& b) {
  return a.numerator() * b.denominator_product() == b.numerator() * a.denominator_product();
}

std::string to_string(const LinFraction& f) {
  std::string out = "(" + to_string(f.numerator()) + ")";
  for (const auto& d : f.denominators()) {
    out += " / (e" + std::to_string(d.hi) + " - e" + std::to_string(d.lo) + ")";
  }
  return out;
}

}  // namespace eqschubert
