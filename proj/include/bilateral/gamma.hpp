#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "bilateral/complex_math.hpp"

namespace bilateral {

/// Gamma(z). Lanczos approximation for Re z >= 1/2, reflection otherwise.
/// Throws PoleError within kPoleTolerance of a nonpositive integer.
Complex gamma(Complex z);

/// Principal branch of log Gamma, analytic on C \ (-inf, 0]. On the negative
/// real axis the value is the limit from the upper half plane.
Complex log_gamma(Complex z);

/// 1/Gamma(z); entire, and exactly zero at nonpositive integers.
Complex rgamma(Complex z);

/// Products of gamma values over products of gamma values, written
/// Gamma[n1, n2, ...; d1, d2, ...]. An empty list is the empty product.
struct GammaBracket {
  std::vector<Complex> numerator_args;
  std::vector<Complex> denominator_args;
};

/// log of the bracket as a sum of log_gamma terms, or nullopt when a
/// denominator argument sits at a pole (the bracket is then exactly zero).
std::optional<Complex> log_gamma_bracket(const GammaBracket& gb,
                                         double numerator_pole_tol = kParameterTolerance);

/// Evaluates the bracket with a single exponentiation of the log sum.
/// Throws PoleError for a numerator pole and OverflowError when the magnitude
/// is not representable.
Complex gamma_bracket(const GammaBracket& gb);

/// exp of a log-space value, throwing OverflowError rather than returning inf.
Complex checked_exp(Complex log_value);

/// Signed Pochhammer symbol (a)_k = Gamma(a+k)/Gamma(a) for k of either sign.
/// For k = -m < 0, (a)_{-m} = (-1)^m / (1-a)_m.
Complex pochhammer(Complex a, std::int64_t k);

/// Relative residual of Legendre's duplication formula
/// Gamma(z) Gamma(z+1/2) = 2^{1-2z} sqrt(pi) Gamma(2z).
double legendre_residual(Complex z);

}  // namespace bilateral
