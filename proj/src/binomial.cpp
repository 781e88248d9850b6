#include "bilateral/binomial.hpp"

#include <algorithm>
#include <cmath>

#include "bilateral/errors.hpp"
#include "bilateral/gamma.hpp"

namespace bilateral {

namespace {

constexpr double kLimitStep = 1e-5;
// Below this upper index every intermediate of the multiplicative formula is an
// integer under 2^53, so lattice values inside the triangle come out exact.
constexpr double kExactLatticeMax = 50.0;

bool is_real_integer(Complex z) { return z.imag() == 0.0 && z.real() == std::round(z.real()); }

Complex regularized_quotient(Complex x, Complex y, double h) {
  GammaBracket gb{{x + 1.0 + h}, {y + 1.0 + h, x - y + 1.0 + h}};
  auto log_value = log_gamma_bracket(gb, kPoleTolerance);
  if (!log_value) return {0.0, 0.0};
  return checked_exp(*log_value);
}

}  // namespace

Complex binom(PlanePoint p) {
  const Complex top = p.x + 1.0;
  const Complex bottom_a = p.y + 1.0;
  const Complex bottom_b = p.x - p.y + 1.0;

  const bool top_pole = near_nonpositive_integer(top);
  const int bottom_poles = static_cast<int>(near_nonpositive_integer(bottom_a)) +
                           static_cast<int>(near_nonpositive_integer(bottom_b));

  if (!top_pole) {
    if (bottom_poles > 0) return {0.0, 0.0};
    if (is_real_integer(p.x) && is_real_integer(p.y) && p.x.real() <= kExactLatticeMax) {
      const double n = p.x.real();
      const double k = std::min(p.y.real(), n - p.y.real());
      double v = 1.0;
      for (double i = 1.0; i <= k; ++i) v = v * (n - k + i) / i;
      return {v, 0.0};
    }
    return checked_exp(*log_gamma_bracket({{top}, {bottom_a, bottom_b}}, kPoleTolerance));
  }
  if (bottom_poles == 0) {
    throw LimitDivergesError("binomial limit diverges: uncancelled numerator pole");
  }
  if (bottom_poles == 2) return {0.0, 0.0};

  // Simple pole over simple pole: f(h) = L + O(h), so 2 f(h/2) - f(h) = L + O(h^2).
  Complex coarse = regularized_quotient(p.x, p.y, kLimitStep);
  Complex fine = regularized_quotient(p.x, p.y, 0.5 * kLimitStep);
  Complex limit = 2.0 * fine - coarse;
  if (!std::isfinite(limit.real()) || !std::isfinite(limit.imag())) {
    throw LimitDivergesError("binomial limit is not finite");
  }
  return limit;
}

Complex binom_row_ratio(Complex n, Complex k, int step) {
  Complex ratio(1.0, 0.0);
  if (step >= 0) {
    for (int j = 1; j <= step; ++j) {
      Complex denominator = k + static_cast<double>(j);
      if (std::abs(denominator) <= kPoleTolerance) throw PoleError("vanishing binomial ratio factor");
      ratio *= (n - k - static_cast<double>(j) + 1.0) / denominator;
    }
  } else {
    for (int j = 0; j < -step; ++j) {
      Complex denominator = n - k + static_cast<double>(j) + 1.0;
      if (std::abs(denominator) <= kPoleTolerance) throw PoleError("vanishing binomial ratio factor");
      ratio *= (k - static_cast<double>(j)) / denominator;
    }
  }
  return ratio;
}

}  // namespace bilateral
