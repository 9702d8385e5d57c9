#pragma once

// Fractions whose denominators are products of linear forms e_hi - e_lo.

#include <string>
#include <vector>

#include "eqschubert/polynomial.hpp"

namespace eqschubert {

/// e_hi - e_lo with hi != lo.
struct LinForm {
  std::size_t hi = 0;
  std::size_t lo = 0;

  LinForm() = default;
  LinForm(std::size_t hi_, std::size_t lo_);

  Polynomial to_polynomial(std::size_t nvars) const;

  friend auto operator<=>(const LinForm&, const LinForm&) = default;
};

class LinFraction {
 public:
  explicit LinFraction(std::size_t nvars = 0) : numerator_(nvars) {}
  explicit LinFraction(Polynomial numerator, std::vector<LinForm> denominators = {});

  std::size_t nvars() const { return numerator_.nvars(); }
  const Polynomial& numerator() const { return numerator_; }
  /// Sorted; every form has hi > lo (signs are folded into the numerator).
  const std::vector<LinForm>& denominators() const { return denominators_; }
  bool is_polynomial() const { return denominators_.empty(); }

  /// Product of the denominators as a polynomial.
  Polynomial denominator_product() const;

 private:
  friend LinFraction normalize(const LinFraction& f);
  Polynomial numerator_;
  std::vector<LinForm> denominators_;
};

/// Cancels every denominator factor that exactly divides the numerator.
/// A zero numerator clears all denominators.
LinFraction normalize(const LinFraction& f);

LinFraction frac_add(const LinFraction& a, const LinFraction& b);
LinFraction frac_sub(const LinFraction& a, const LinFraction& b);
LinFraction frac_mul(const LinFraction& a, const LinFraction& b);

/// a == b as rational functions (cross-multiplication).
bool same_value(const LinFraction& a, const LinFraction& b);

std::string to_string(const LinFraction& f);

}  // namespace eqschubert
