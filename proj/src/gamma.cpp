#include "bilateral/gamma.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <string>

#include "bilateral/errors.hpp"

namespace bilateral {

namespace {

// Lanczos approximation, g = 7, nine terms.
constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczosCoefficients = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7,
};

const double kHalfLog2Pi = 0.5 * std::log(2.0 * kPi);
const double kLogPi = std::log(kPi);
const double kSqrtPi = std::sqrt(kPi);
const double kMaxLog = std::log(std::numeric_limits<double>::max());

// Valid for Re z >= 1/2.
Complex lanczos_log_gamma(Complex z) {
  Complex w = z - 1.0;
  Complex series(kLanczosCoefficients[0], 0.0);
  for (std::size_t i = 1; i < kLanczosCoefficients.size(); ++i) {
    series += kLanczosCoefficients[i] / (w + static_cast<double>(i));
  }
  Complex t = w + kLanczosG + 0.5;
  return kHalfLog2Pi + (w + 0.5) * std::log(t) - t + std::log(series);
}

// Exact factorials for small positive integer arguments.
std::optional<double> small_integer_gamma(Complex z) {
  if (z.imag() != 0.0) return std::nullopt;
  double x = z.real();
  if (x < 1.0 || x > 23.0 || x != std::floor(x)) return std::nullopt;
  double f = 1.0;
  for (int i = 2; i < static_cast<int>(x); ++i) f *= i;
  return f;
}

void require_not_pole(Complex z) {
  if (near_nonpositive_integer(z, kPoleTolerance)) {
    throw PoleError("gamma pole at z = " + std::to_string(z.real()) + (z.imag() < 0 ? "" : "+") +
                    std::to_string(z.imag()) + "i");
  }
}

}  // namespace

Complex checked_exp(Complex log_value) {
  if (!(log_value.real() <= kMaxLog)) throw OverflowError("result magnitude exceeds binary64 range");
  Complex v = std::exp(log_value);
  if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
    throw OverflowError("result magnitude exceeds binary64 range");
  }
  return v;
}

Complex gamma(Complex z) {
  require_not_pole(z);
  if (auto exact = small_integer_gamma(z)) return {*exact, 0.0};
  if (z.real() >= 0.5) return checked_exp(lanczos_log_gamma(z));
  if (std::abs(z.imag()) < 20.0 && z.real() > -150.0) {
    return kPi / (sin_pi(z) * gamma(1.0 - z));
  }
  return checked_exp(log_gamma(z));
}

Complex log_gamma(Complex z) {
  require_not_pole(z);
  if (z == Complex(1.0, 0.0) || z == Complex(2.0, 0.0)) return {0.0, 0.0};
  if (z.real() >= 0.5) return lanczos_log_gamma(z);
  // Reflection plus the multiple of 2 pi i that keeps the result on the principal branch.
  double sign = z.imag() < 0.0 ? -1.0 : 1.0;
  double turns = std::floor(0.5 * z.real() + 0.25);
  Complex correction(0.0, sign * 2.0 * kPi * turns);
  return kLogPi - log_sin_pi(z) - log_gamma(1.0 - z) + correction;
}

Complex rgamma(Complex z) {
  if (near_nonpositive_integer(z, kPoleTolerance)) return {0.0, 0.0};
  if (z.real() >= 0.5) {
    if (z.real() < 100.0) return 1.0 / gamma(z);
    return std::exp(-lanczos_log_gamma(z));
  }
  if (std::abs(z.imag()) < 20.0 && z.real() > -150.0) {
    return sin_pi(z) * gamma(1.0 - z) / kPi;
  }
  return std::exp(-log_gamma(z));
}

std::optional<Complex> log_gamma_bracket(const GammaBracket& gb, double numerator_pole_tol) {
  for (const Complex& arg : gb.numerator_args) {
    if (near_nonpositive_integer(arg, numerator_pole_tol)) {
      throw PoleError("gamma bracket numerator argument at a pole");
    }
  }
  for (const Complex& arg : gb.denominator_args) {
    if (near_nonpositive_integer(arg, kPoleTolerance)) return std::nullopt;
  }
  Complex sum(0.0, 0.0);
  for (const Complex& arg : gb.numerator_args) sum += log_gamma(arg);
  for (const Complex& arg : gb.denominator_args) sum -= log_gamma(arg);
  return sum;
}

Complex gamma_bracket(const GammaBracket& gb) {
  auto log_value = log_gamma_bracket(gb);
  if (!log_value) return {0.0, 0.0};
  return checked_exp(*log_value);
}

Complex pochhammer(Complex a, std::int64_t k) {
  Complex result(1.0, 0.0);
  if (k >= 0) {
    for (std::int64_t j = 0; j < k; ++j) result *= a + static_cast<double>(j);
  } else {
    std::int64_t m = -k;
    Complex denominator(1.0, 0.0);
    for (std::int64_t j = 0; j < m; ++j) {
      Complex factor = 1.0 - a + static_cast<double>(j);
      if (std::abs(factor) <= kPoleTolerance) throw PoleError("pochhammer pole for negative index");
      denominator *= factor;
    }
    result = (m % 2 == 0 ? 1.0 : -1.0) / denominator;
  }
  if (!std::isfinite(result.real()) || !std::isfinite(result.imag())) {
    throw OverflowError("pochhammer symbol overflows binary64");
  }
  return result;
}

double legendre_residual(Complex z) {
  Complex lhs = gamma(z) * gamma(z + 0.5);
  Complex rhs = pow2(1.0 - 2.0 * z) * kSqrtPi * gamma(2.0 * z);
  double r = std::abs(lhs - rhs) / std::abs(rhs);
  if (!std::isfinite(r)) throw OverflowError("Legendre duplication terms overflow");
  return r;
}

}  // namespace bilateral
