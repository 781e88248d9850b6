#pragma once

// Complex scalar helpers shared by every module: pole classification,
// exactly-reduced trigonometric functions of pi*z, principal-branch powers and
// powers of unit-modulus numbers.

#include <complex>
#include <cstdint>
#include <numbers>

namespace bilateral {

using Complex = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kLn2 = std::numbers::ln2;

/// Distance below which an argument counts as a gamma pole.
inline constexpr double kPoleTolerance = 1e-12;
/// Integer tolerance used for series parameters and gamma-bracket numerators.
inline constexpr double kParameterTolerance = 1e-9;
/// A power base whose imaginary part is this close to zero on the negative axis is on the cut.
inline constexpr double kBranchCutTolerance = 1e-12;

/// True when z is within tol of one of 0, -1, -2, ...
bool near_nonpositive_integer(Complex z, double tol = kPoleTolerance);

/// True when z is within tol of one of 1, 2, 3, ...
bool near_positive_integer(Complex z, double tol = kParameterTolerance);

/// Distance from z to the nearest nonpositive integer.
double pole_distance(Complex z);

/// sin(pi x) with the argument reduced exactly; returns exact zeros at integers.
double sin_pi(double x);
/// cos(pi x) with exact zeros at half-integers.
double cos_pi(double x);

Complex sin_pi(Complex z);
Complex cos_pi(Complex z);

/// Principal value of log(sin(pi z)), imaginary part in (-pi, pi], overflow-free for large |Im z|.
Complex log_sin_pi(Complex z);

/// Principal logarithm. Throws BranchCutError when w lies on the negative real
/// axis (|Im w| <= kBranchCutTolerance) and PoleError when w == 0.
Complex principal_log(Complex w);

/// w^p = exp(p * Log w) on the principal branch; 0^p = 0 for Re p > 0.
Complex principal_pow(Complex w, Complex p);

/// 2^p for complex p.
Complex pow2(Complex p);

/// Projects z onto the unit circle.
Complex to_unit(Complex z);

/// z^k for |z| = 1 by repeated multiplication, renormalizing the running
/// power to unit modulus every few steps. Negative k uses conj(z).
Complex unit_pow(Complex z, std::int64_t k);

/// |x - ref| / |ref|, or |x| when ref == 0.
double relative_residual(Complex value, Complex reference);

/// |x - y| / max(|x|, |y|), or 0 when both vanish.
double symmetric_residual(Complex x, Complex y);

}  // namespace bilateral
