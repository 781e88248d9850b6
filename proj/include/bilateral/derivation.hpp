#pragma once

// Mechanical checks of the two step-width-two derivations of the duplication
// formula. The sum path adds the bilateral binomial expansions of (1+z)^n and
// (1-z)^n so that odd offsets cancel; the difference path subtracts them so
// that even offsets cancel. Both reduce to a 2H2 series in z^2.

#include "bilateral/complex_math.hpp"
#include "bilateral/report.hpp"
#include "bilateral/series.hpp"

namespace bilateral {

/// Upper index n, base lower index k (the free shift K is fixed to k), unit
/// argument z, and the half-width of offsets j checked around k.
struct DerivationPoint {
  Complex n;
  Complex k;
  Complex z;
  int j_range = 20;
};

/// Throws PreconditionError unless j_range >= 1, |z| = 1 and binom(n, k+j) is
/// finite for |j| <= j_range.
void validate(const DerivationPoint& pt);

/// n = 2c-2a-1, k = 2c-1: the sum path lands on 2H2[a, a+1/2; c, c+1/2; z^2].
DerivationPoint sum_path_point(Complex a, Complex c, Complex z, int j_range = 20);
/// n = 2c-2a-1, k = 2c: the difference path lands on the same series.
DerivationPoint diff_path_point(Complex a, Complex c, Complex z, int j_range = 20);

/// 2H2[(k-n)/2, (k-n+1)/2; (k+1)/2, (k+2)/2; z^2].
BilateralParams sum_path_parameters(Complex n, Complex k, Complex z);
/// 2H2[(k-n-1)/2, (k-n)/2; k/2, (k+1)/2; z^2].
BilateralParams diff_path_parameters(Complex n, Complex k, Complex z);

/// 2 Gamma(n+1) / (Gamma(k+1) Gamma(n-k+1)), taken as 2 binom(n, k).
Complex sum_path_prefactor(Complex n, Complex k);
/// 2 Gamma(n+1) / (z Gamma(k) Gamma(n-k+2)), taken as (2/z) binom(n, k-1).
Complex diff_path_prefactor(Complex n, Complex k, Complex z);

/// (1+z)^n / z^k + (1-z)^n / (-z)^k with principal branches.
Complex sum_path_lhs(Complex n, Complex k, Complex z);
/// (1+z)^n / z^k - (1-z)^n / (-z)^k with principal branches.
Complex diff_path_lhs(Complex n, Complex k, Complex z);

/// z^{k+j}/z^k + (-z)^{k+j}/(-z)^k under the formal convention, i.e. z^j + (-z)^j.
Complex sum_path_weight(Complex z, int j);
/// z^{k+j}/z^k - (-z)^{k+j}/(-z)^k, i.e. z^j - (-z)^j.
Complex diff_path_weight(Complex z, int j);

/// Combined weights z^{k+j}/z^k + (-z)^{k+j}/(-z)^k under the formal
/// convention (-z)^{k+j}/(-z)^k = (-1)^j z^j: 0 for odd j, 2 z^j for even j.
VerificationReport check_sum_cancellation(const DerivationPoint& pt);

/// Difference weights: 0 for even j, 2 z^j for odd j.
VerificationReport check_diff_cancellation(const DerivationPoint& pt);

/// Coefficient match, consecutive-term ratios and the end-to-end series
/// identity for the sum path, plus agreement with the duplication closed form
/// at the substituted (a, c). The end-to-end check is not applicable outside
/// the convergence region.
VerificationReport check_sum_path(const DerivationPoint& pt, const ConvergenceBudget& budget = {});

/// The same sub-checks for the difference path.
VerificationReport check_diff_path(const DerivationPoint& pt, const ConvergenceBudget& budget = {});

/// Both paths at the same (a, c, z): identical 2H2 parameter tuples, and
/// identical 2H2 values implied by their left-hand sides and series sums.
VerificationReport check_paths_agree(Complex a, Complex c, Complex z, const ConvergenceBudget& budget = {});

}  // namespace bilateral
