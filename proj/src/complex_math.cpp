#include "bilateral/complex_math.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "bilateral/errors.hpp"

namespace bilateral {

namespace {

constexpr int kRenormalizeEvery = 16;

}  // namespace

double pole_distance(Complex z) {
  double re = z.real();
  double nearest = std::min(0.0, std::round(re));
  return std::hypot(re - nearest, z.imag());
}

bool near_nonpositive_integer(Complex z, double tol) {
  if (z.real() > tol) return false;
  return pole_distance(z) <= tol;
}

bool near_positive_integer(Complex z, double tol) {
  double nearest = std::round(z.real());
  if (nearest < 1.0) return false;
  return std::hypot(z.real() - nearest, z.imag()) <= tol;
}

double sin_pi(double x) {
  if (!std::isfinite(x)) return std::numeric_limits<double>::quiet_NaN();
  double r = std::remainder(x, 2.0);  // exact, in [-1, 1]
  if (r == 0.0 || r == 1.0 || r == -1.0) return 0.0;
  if (r > 0.5) {
    r = 1.0 - r;
  } else if (r < -0.5) {
    r = -1.0 - r;
  }
  return std::sin(kPi * r);
}

double cos_pi(double x) {
  if (!std::isfinite(x)) return std::numeric_limits<double>::quiet_NaN();
  double r = std::abs(std::remainder(x, 2.0));  // [0, 1]
  if (r == 0.5) return 0.0;
  return sin_pi(0.5 - r);
}

Complex sin_pi(Complex z) {
  double x = z.real();
  double y = z.imag();
  if (y == 0.0) return {sin_pi(x), 0.0};
  return {sin_pi(x) * std::cosh(kPi * y), cos_pi(x) * std::sinh(kPi * y)};
}

Complex cos_pi(Complex z) {
  double x = z.real();
  double y = z.imag();
  if (y == 0.0) return {cos_pi(x), 0.0};
  return {cos_pi(x) * std::cosh(kPi * y), -sin_pi(x) * std::sinh(kPi * y)};
}

Complex log_sin_pi(Complex z) {
  double x = z.real();
  double y = z.imag();
  if (y == 0.0) {
    double s = sin_pi(x);
    return {std::log(std::abs(s)), s < 0.0 ? kPi : 0.0};
  }
  if (std::abs(y) < 20.0) return std::log(sin_pi(z));
  if (y < 0.0) return std::conj(log_sin_pi(std::conj(z)));
  // sin(pi z) = (i/2) e^{-i pi z} (1 - e^{2 i pi z}); the last factor is 1 to working precision.
  Complex e2 = std::exp(Complex(-2.0 * kPi * y, 2.0 * kPi * std::remainder(x, 1.0)));
  Complex v = Complex(kPi * y - kLn2, -kPi * std::remainder(x, 2.0) + 0.5 * kPi) + std::log(1.0 - e2);
  double im = std::remainder(v.imag(), 2.0 * kPi);
  if (im == -kPi) im = kPi;
  return {v.real(), im};
}

Complex principal_log(Complex w) {
  if (w == Complex(0.0, 0.0)) throw PoleError("logarithm of zero");
  if (w.real() < 0.0 && std::abs(w.imag()) <= kBranchCutTolerance) {
    throw BranchCutError("power base on the negative real axis");
  }
  return std::log(w);
}

Complex principal_pow(Complex w, Complex p) {
  if (w == Complex(0.0, 0.0)) {
    if (p.real() > 0.0) return {0.0, 0.0};
    throw PoleError("zero raised to a power with nonpositive real part");
  }
  return std::exp(p * principal_log(w));
}

Complex pow2(Complex p) { return std::exp(p * kLn2); }

Complex to_unit(Complex z) {
  double m = std::abs(z);
  if (m == 0.0) throw PreconditionError("cannot project zero onto the unit circle");
  return z / m;
}

Complex unit_pow(Complex z, std::int64_t k) {
  Complex base = k >= 0 ? z : std::conj(z);
  std::int64_t m = k >= 0 ? k : -k;
  Complex acc(1.0, 0.0);
  for (std::int64_t i = 1; i <= m; ++i) {
    acc *= base;
    if (i % kRenormalizeEvery == 0) acc /= std::abs(acc);
  }
  return acc;
}

double relative_residual(Complex value, Complex reference) {
  double ref = std::abs(reference);
  double diff = std::abs(value - reference);
  return ref == 0.0 ? diff : diff / ref;
}

double symmetric_residual(Complex x, Complex y) {
  double scale = std::max(std::abs(x), std::abs(y));
  if (scale == 0.0) return 0.0;
  return std::abs(x - y) / scale;
}

}  // namespace bilateral
