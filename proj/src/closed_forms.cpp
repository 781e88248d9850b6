#include "bilateral/closed_forms.hpp"

#include <cmath>

#include "bilateral/errors.hpp"
#include "bilateral/gamma.hpp"

namespace bilateral {

namespace {

void require_admissible_argument(Complex z) {
  if (std::abs(z) <= kPoleTolerance) throw PreconditionError("z = 0 is not an admissible argument");
  if (std::abs(z - 1.0) <= kPoleTolerance) {
    throw PreconditionError("z = 1 is not an admissible argument (use the unit-value form)");
  }
}

// log of Gamma(2c) Gamma(1-2a) / Gamma(2c-2a); nullopt when the ratio vanishes.
std::optional<Complex> log_duplication_prefactor(Complex a, Complex c) {
  return log_gamma_bracket({{2.0 * c, 1.0 - 2.0 * a}, {2.0 * c - 2.0 * a}});
}

}  // namespace

Complex cf_bilateral_binomial(Complex a, Complex c, Complex z) {
  require_admissible_argument(z);
  auto log_prefactor = log_gamma_bracket({{c, 1.0 - a}, {c - a}});
  const Complex log_one_minus_z = principal_log(1.0 - z);
  const Complex log_minus_z = principal_log(-z);
  if (!log_prefactor) return {0.0, 0.0};
  return checked_exp(*log_prefactor + (c - a - 1.0) * log_one_minus_z - (c - 1.0) * log_minus_z);
}

Complex cf_duplication(Complex a, Complex c, Complex z, Branch branch) {
  require_admissible_argument(z);
  Complex w = std::sqrt(z);
  if (branch == Branch::minus) w = -w;
  const Complex n = 2.0 * c - 2.0 * a - 1.0;
  const Complex k = 2.0 * c - 1.0;

  const Complex log_w = principal_log(w);
  const Complex log_minus_w = principal_log(-w);
  const Complex log_one_plus_w = principal_log(1.0 + w);
  const Complex log_one_minus_w = principal_log(1.0 - w);

  auto log_prefactor = log_duplication_prefactor(a, c);
  if (!log_prefactor) return {0.0, 0.0};
  const Complex base = *log_prefactor - kLn2;
  return checked_exp(base + n * log_one_plus_w - k * log_w) +
         checked_exp(base + n * log_one_minus_w - k * log_minus_w);
}

Complex cf_dougall(Complex a, Complex b, Complex c, Complex d) {
  return gamma_bracket({{c, d, 1.0 - a, 1.0 - b, c + d - a - b - 1.0}, {c - a, d - a, c - b, d - b}});
}

Complex cf_unit_value(Complex a, Complex c) {
  auto log_prefactor = log_duplication_prefactor(a, c);
  if (!log_prefactor) return {0.0, 0.0};
  return checked_exp(*log_prefactor + (2.0 * c - 2.0 * a - 2.0) * kLn2);
}

Complex cf_minus_one(Complex a, Complex c, double exponent_shift) {
  auto log_prefactor = log_duplication_prefactor(a, c);
  if (!log_prefactor) return {0.0, 0.0};
  const Complex cosine = cos_pi((2.0 * c + 2.0 * a - 1.0) / 4.0);
  return checked_exp(*log_prefactor + (c - a + exponent_shift) * kLn2) * cosine;
}

Complex kummer_sum(Complex a, Complex b) {
  return gamma_bracket({{a - b + 1.0, 0.5 * a + 1.0}, {a + 1.0, 0.5 * a - b + 1.0}});
}

Complex kummer_half(Complex a) {
  return gamma_bracket({{Complex(0.5, 0.0), 0.5 * a + 1.0}, {a + 1.0, 0.5 - 0.5 * a}});
}

Complex kummer_half_trig(Complex a) { return pow2(-a) * cos_pi(0.5 * a); }

}  // namespace bilateral
