#pragma once

#include "bilateral/complex_math.hpp"

namespace bilateral {

/// Which square root of z enters the duplication formula.
enum class Branch { plus, minus };

/// Bilateral binomial theorem:
///   1H1[a; c; z] = (1-z)^{c-a-1} Gamma(c) Gamma(1-a) / ((-z)^{c-1} Gamma(c-a)).
/// Principal branches; BranchCutError if 1-z or -z is on the negative real axis.
Complex cf_bilateral_binomial(Complex a, Complex c, Complex z);

/// Bilateral binomial duplication formula for 2H2[a, a+1/2; c, c+1/2; z]:
///   Gamma(2c) Gamma(1-2a) / (2 Gamma(2c-2a))
///     * ((1+w)^{2c-2a-1} / w^{2c-1} + (1-w)^{2c-2a-1} / (-w)^{2c-1}),
/// where w is the principal square root of z, negated for Branch::minus.
/// z = 0 and z = 1 are rejected; use cf_unit_value for z = 1.
Complex cf_duplication(Complex a, Complex c, Complex z, Branch branch = Branch::plus);

/// Dougall's sum 2H2[a, b; c, d; 1] =
///   Gamma[c, d, 1-a, 1-b, c+d-a-b-1; c-a, d-a, c-b, d-b].
Complex cf_dougall(Complex a, Complex b, Complex c, Complex d);

/// 2H2[a, a+1/2; c, c+1/2; 1] = Gamma(2c) Gamma(1-2a) / Gamma(2c-2a) * 2^{2c-2a-2}.
Complex cf_unit_value(Complex a, Complex c);

/// Power-of-two shift in the z = -1 special case. Evaluating the duplication
/// formula at sqrt(-1) = i gives 2^{c-a-1/2}.
inline constexpr double kMinusOneExponentShift = -0.5;

/// 2H2[a, a+1/2; c, c+1/2; -1] =
///   Gamma(2c) Gamma(1-2a) / Gamma(2c-2a) * 2^{c-a+shift} * cos((2c+2a-1) pi / 4).
/// Any shift other than kMinusOneExponentShift gives a wrong value; the
/// parameter exists so tests can exercise that.
Complex cf_minus_one(Complex a, Complex c, double exponent_shift = kMinusOneExponentShift);

/// Kummer's sum 2F1[a, b; a-b+1; -1] = Gamma(a-b+1) Gamma(a/2+1) / (Gamma(a+1) Gamma(a/2-b+1)).
Complex kummer_sum(Complex a, Complex b);

/// 2F1[a, a+1/2; 1/2; -1] in gamma form Gamma(1/2) Gamma(a/2+1) / (Gamma(a+1) Gamma(1/2-a/2)).
Complex kummer_half(Complex a);

/// The same value in trigonometric form 2^{-a} cos(pi a / 2).
Complex kummer_half_trig(Complex a);

}  // namespace bilateral
