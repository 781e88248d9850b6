#include "bilateral/derivation.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

#include "bilateral/binomial.hpp"
#include "bilateral/closed_forms.hpp"
#include "bilateral/errors.hpp"
#include "bilateral/gamma.hpp"

namespace bilateral {

namespace {

constexpr double kCancellationTol = 1e-14;
constexpr double kShiftIndependenceTol = 1e-12;
constexpr double kCoefficientTol = 1e-10;
constexpr double kRatioTol = 1e-12;
constexpr double kEndToEndTol = 1e-5;
constexpr double kClosedFormTol = 1e-10;
constexpr double kPathsAgreeTol = 1e-10;
constexpr double kParameterTupleTol = 1e-14;
// Ratio tests lose meaning near zeros of the binomial coefficient.
constexpr double kDegenerateBinomial = 1e-6;

std::vector<NamedValue> point_values(const DerivationPoint& pt) {
  return {{"n", pt.n}, {"k", pt.k}, {"z", pt.z}, {"j_range", Complex(pt.j_range, 0.0)}};
}

// Both paths reduce to the sum-path shape with an effective lower index:
// k for the sum path, k-1 for the difference path, whose coefficients carry
// one extra factor 1/z.
struct PathSetup {
  Complex n;
  Complex k_eff;
  Complex z;
  int j_range = 0;
  int offset_shift = 0;  // offset j = 2m + offset_shift
  Complex prefactor;
  std::function<Complex()> lhs;
};

bool offset_in_range(const PathSetup& p, int m) { return std::abs(2 * m + p.offset_shift) <= p.j_range; }

SubCheck coefficient_check(const PathSetup& p) {
  const BilateralParams params = sum_path_parameters(p.n, p.k_eff, p.z);
  SubCheck sc = make_subcheck("coefficients", 0.0, kCoefficientTol);
  sc.evaluated = 0;
  double worst = 0.0;
  for (int m = -p.j_range; m <= p.j_range; ++m) {
    if (!offset_in_range(p, m)) continue;
    const int offset = 2 * m + p.offset_shift;
    const Complex left = 2.0 * binom(p.n, p.k_eff + 2.0 * m) * unit_pow(p.z, offset);
    Complex right;
    try {
      right = p.prefactor * series_term(params, m);
    } catch (const PoleError&) {
      ++sc.skipped;
      continue;
    }
    worst = std::max(worst, symmetric_residual(left, right));
    ++sc.evaluated;
  }
  sc.residual = worst;
  sc.status = worst <= sc.tolerance ? CheckStatus::passed : CheckStatus::failed;
  if (sc.skipped) sc.notes = std::to_string(sc.skipped) + " offsets skipped at series-term poles";
  return sc;
}

SubCheck ratio_check(const PathSetup& p) {
  SubCheck sc = make_subcheck("ratios", 0.0, kRatioTol);
  sc.evaluated = 0;
  const Complex half_top_a = 0.5 * (p.k_eff - p.n);
  const Complex half_top_b = 0.5 * (p.k_eff - p.n + 1.0);
  const Complex half_bottom_a = 0.5 * (p.k_eff + 1.0);
  const Complex half_bottom_b = 0.5 * (p.k_eff + 2.0);
  const Complex z2 = p.z * p.z;
  double worst = 0.0;
  for (int m = -p.j_range; m <= p.j_range; ++m) {
    if (!offset_in_range(p, m) || !offset_in_range(p, m + 1)) continue;
    const int offset = 2 * m + p.offset_shift;
    const Complex lower = p.k_eff + 2.0 * m;
    const Complex b0 = binom(p.n, lower);
    const Complex b1 = binom(p.n, lower + 2.0);
    const Complex denominator = (half_bottom_a + double(m)) * (half_bottom_b + double(m));
    if (std::abs(b0) < kDegenerateBinomial || std::abs(b1) < kDegenerateBinomial ||
        std::abs(denominator) <= kPoleTolerance) {
      ++sc.skipped;
      continue;
    }
    const Complex expected = (half_top_a + double(m)) * (half_top_b + double(m)) / denominator * z2;
    const Complex from_binomials = (b1 * unit_pow(p.z, offset + 2)) / (b0 * unit_pow(p.z, offset));
    worst = std::max(worst, relative_residual(from_binomials, expected));
    try {
      const Complex from_row_ratio = binom_row_ratio(p.n, lower, 2) * z2;
      worst = std::max(worst, relative_residual(from_row_ratio, expected));
    } catch (const PoleError&) {
    }
    ++sc.evaluated;
  }
  sc.residual = worst;
  sc.status = worst <= sc.tolerance ? CheckStatus::passed : CheckStatus::failed;
  if (sc.skipped) sc.notes = std::to_string(sc.skipped) + " offsets skipped at degenerate binomials";
  return sc;
}

struct EndToEnd {
  SubCheck check;
  std::optional<std::int64_t> n_terms;
  std::optional<Complex> lhs;
};

EndToEnd end_to_end_check(const PathSetup& p, const ConvergenceBudget& budget) {
  EndToEnd out;
  try {
    out.lhs = p.lhs();
  } catch (const BranchCutError& e) {
    out.check = not_applicable_subcheck("end_to_end", kEndToEndTol, e.what());
    return out;
  } catch (const MathDomainError& e) {
    out.check = error_subcheck("end_to_end", kEndToEndTol, e.what());
    return out;
  }
  try {
    const SeriesValue sv = eval_bilateral(sum_path_parameters(p.n, p.k_eff, p.z), budget);
    out.n_terms = sv.n_terms;
    out.check = make_subcheck("end_to_end", relative_residual(p.prefactor * sv.value, *out.lhs), kEndToEndTol);
    if (!sv.converged) out.check.notes = "tail bound above rel_tol at max half-width";
  } catch (const DivergenceError& e) {
    out.check = not_applicable_subcheck("end_to_end", kEndToEndTol, e.what());
  } catch (const PreconditionError& e) {
    out.check = not_applicable_subcheck("end_to_end", kEndToEndTol, e.what());
  } catch (const MathDomainError& e) {
    out.check = error_subcheck("end_to_end", kEndToEndTol, e.what());
  }
  return out;
}

SubCheck closed_form_check(const PathSetup& p, const std::optional<Complex>& lhs) {
  if (!lhs) return not_applicable_subcheck("closed_form", kClosedFormTol, "left-hand side unavailable");
  if (p.prefactor == Complex(0.0, 0.0)) {
    return not_applicable_subcheck("closed_form", kClosedFormTol, "prefactor vanishes");
  }
  const Complex a = 0.5 * (p.k_eff - p.n);
  const Complex c = 0.5 * (p.k_eff + 1.0);
  try {
    const Complex closed = cf_duplication(a, c, p.z * p.z, Branch::plus);
    return make_subcheck("closed_form", relative_residual(*lhs / p.prefactor, closed), kClosedFormTol);
  } catch (const Error& e) {
    return not_applicable_subcheck("closed_form", kClosedFormTol, e.what());
  }
}

VerificationReport run_path(const std::string& id, const DerivationPoint& pt, const PathSetup& p,
                            const ConvergenceBudget& budget) {
  std::vector<SubCheck> checks;
  checks.push_back(coefficient_check(p));
  checks.push_back(ratio_check(p));
  EndToEnd e2e = end_to_end_check(p, budget);
  checks.push_back(e2e.check);
  checks.push_back(closed_form_check(p, e2e.lhs));
  VerificationReport report = make_composite_report(id, point_values(pt), std::move(checks));
  report.n_terms_used = e2e.n_terms;
  return report;
}

Complex branch_term(Complex n, Complex k, Complex base, Complex power_base) {
  return checked_exp(n * principal_log(base) - k * principal_log(power_base));
}

void require_unit(Complex z) {
  if (std::abs(std::abs(z) - 1.0) > 1e-9) throw PreconditionError("derivation argument must be unit modulus");
}

VerificationReport cancellation_report(const std::string& id, const DerivationPoint& pt, bool sum) {
  if (pt.j_range < 1) throw PreconditionError("j_range must be at least 1");
  require_unit(pt.z);
  const Complex z = to_unit(pt.z);
  const double sign = sum ? 1.0 : -1.0;

  double worst = 0.0;
  for (int j = -pt.j_range; j <= pt.j_range; ++j) {
    const Complex weight = sum ? sum_path_weight(z, j) : diff_path_weight(z, j);
    const bool survives = sum ? (j % 2 == 0) : (j % 2 != 0);
    const Complex expected = survives ? 2.0 * unit_pow(z, j) : Complex(0.0, 0.0);
    worst = std::max(worst, std::abs(weight - expected));
  }
  SubCheck pattern = make_subcheck("cancellation", worst, kCancellationTol);
  pattern.evaluated = 2 * pt.j_range + 1;

  // With log(-z) := log z + i pi the weights do not depend on the base index k.
  const Complex log_z = std::log(z);
  const Complex log_minus_z = log_z + Complex(0.0, kPi);
  double drift = 0.0;
  for (int j = -pt.j_range; j <= pt.j_range; ++j) {
    const double jj = j;
    const Complex at_k = std::exp((pt.k + jj) * log_z - pt.k * log_z) +
                         sign * std::exp((pt.k + jj) * log_minus_z - pt.k * log_minus_z);
    const Complex at_zero = std::exp(jj * log_z) + sign * std::exp(jj * log_minus_z);
    drift = std::max(drift, std::abs(at_k - at_zero));
  }
  SubCheck independence = make_subcheck("shift_independence", drift, kShiftIndependenceTol);
  independence.evaluated = 2 * pt.j_range + 1;

  return make_composite_report(id, point_values(pt), {pattern, independence});
}

}  // namespace

Complex sum_path_weight(Complex z, int j) { return unit_pow(z, j) + unit_pow(-z, j); }

Complex diff_path_weight(Complex z, int j) { return unit_pow(z, j) - unit_pow(-z, j); }

void validate(const DerivationPoint& pt) {
  if (pt.j_range < 1) throw PreconditionError("j_range must be at least 1");
  require_unit(pt.z);
  for (int j = -pt.j_range; j <= pt.j_range; ++j) {
    try {
      Complex b = binom(pt.n, pt.k + static_cast<double>(j));
      if (!std::isfinite(b.real()) || !std::isfinite(b.imag())) throw OverflowError("non-finite");
    } catch (const MathDomainError& e) {
      throw PreconditionError(std::string("binomial factor is not finite near the derivation point: ") + e.what());
    }
  }
}

DerivationPoint sum_path_point(Complex a, Complex c, Complex z, int j_range) {
  return {2.0 * c - 2.0 * a - 1.0, 2.0 * c - 1.0, z, j_range};
}

DerivationPoint diff_path_point(Complex a, Complex c, Complex z, int j_range) {
  return {2.0 * c - 2.0 * a - 1.0, 2.0 * c, z, j_range};
}

BilateralParams sum_path_parameters(Complex n, Complex k, Complex z) {
  return {{0.5 * (k - n), 0.5 * (k - n + 1.0)}, {0.5 * (k + 1.0), 0.5 * (k + 2.0)}, z * z};
}

BilateralParams diff_path_parameters(Complex n, Complex k, Complex z) {
  return {{0.5 * (k - n - 1.0), 0.5 * (k - n)}, {0.5 * k, 0.5 * (k + 1.0)}, z * z};
}

Complex sum_path_prefactor(Complex n, Complex k) { return 2.0 * binom(n, k); }

Complex diff_path_prefactor(Complex n, Complex k, Complex z) { return 2.0 * binom(n, k - 1.0) / z; }

Complex sum_path_lhs(Complex n, Complex k, Complex z) {
  return branch_term(n, k, 1.0 + z, z) + branch_term(n, k, 1.0 - z, -z);
}

Complex diff_path_lhs(Complex n, Complex k, Complex z) {
  return branch_term(n, k, 1.0 + z, z) - branch_term(n, k, 1.0 - z, -z);
}

VerificationReport check_sum_cancellation(const DerivationPoint& pt) {
  return cancellation_report("eq8_odd_cancellation", pt, true);
}

VerificationReport check_diff_cancellation(const DerivationPoint& pt) {
  return cancellation_report("eq14_even_cancellation", pt, false);
}

VerificationReport check_sum_path(const DerivationPoint& pt, const ConvergenceBudget& budget) {
  validate(pt);
  PathSetup p;
  p.n = pt.n;
  p.k_eff = pt.k;
  p.z = to_unit(pt.z);
  p.j_range = pt.j_range;
  p.offset_shift = 0;
  p.prefactor = sum_path_prefactor(pt.n, pt.k);
  p.lhs = [n = pt.n, k = pt.k, z = p.z] { return sum_path_lhs(n, k, z); };
  return run_path("eq11_sum_path", pt, p, budget);
}

VerificationReport check_diff_path(const DerivationPoint& pt, const ConvergenceBudget& budget) {
  validate(pt);
  PathSetup p;
  p.n = pt.n;
  p.k_eff = pt.k - 1.0;
  p.z = to_unit(pt.z);
  p.j_range = pt.j_range;
  p.offset_shift = -1;
  p.prefactor = diff_path_prefactor(pt.n, pt.k, p.z);
  p.lhs = [n = pt.n, k = pt.k, z = p.z] { return diff_path_lhs(n, k, z); };
  return run_path("eq18_diff_path", pt, p, budget);
}

VerificationReport check_paths_agree(Complex a, Complex c, Complex z, const ConvergenceBudget& budget) {
  const DerivationPoint sp = sum_path_point(a, c, z);
  const DerivationPoint dp = diff_path_point(a, c, z);
  const BilateralParams sum_params = sum_path_parameters(sp.n, sp.k, z);
  const BilateralParams diff_params = diff_path_parameters(dp.n, dp.k, z);

  double tuple_gap = 0.0;
  for (std::size_t i = 0; i < 2; ++i) {
    tuple_gap = std::max(tuple_gap, symmetric_residual(sum_params.a_list[i], diff_params.a_list[i]));
    tuple_gap = std::max(tuple_gap, symmetric_residual(sum_params.c_list[i], diff_params.c_list[i]));
  }
  std::vector<SubCheck> checks{make_subcheck("parameter_tuples", tuple_gap, kParameterTupleTol)};

  try {
    const Complex from_sum = sum_path_lhs(sp.n, sp.k, z) / sum_path_prefactor(sp.n, sp.k);
    const Complex from_diff = diff_path_lhs(dp.n, dp.k, z) / diff_path_prefactor(dp.n, dp.k, z);
    checks.push_back(make_subcheck("implied_values", symmetric_residual(from_sum, from_diff), kPathsAgreeTol));
  } catch (const Error& e) {
    checks.push_back(error_subcheck("implied_values", kPathsAgreeTol, e.what()));
  }

  std::optional<std::int64_t> n_terms;
  try {
    const SeriesValue s1 = eval_bilateral(sum_params, budget);
    const SeriesValue s2 = eval_bilateral(diff_params, budget);
    n_terms = std::max(s1.n_terms, s2.n_terms);
    checks.push_back(make_subcheck("series_values", symmetric_residual(s1.value, s2.value), kPathsAgreeTol));
  } catch (const DivergenceError& e) {
    checks.push_back(not_applicable_subcheck("series_values", kPathsAgreeTol, e.what()));
  } catch (const Error& e) {
    checks.push_back(error_subcheck("series_values", kPathsAgreeTol, e.what()));
  }

  VerificationReport report =
      make_composite_report("eq11_eq18_paths_agree", {{"a", a}, {"c", c}, {"z", z}}, std::move(checks));
  report.n_terms_used = n_terms;
  return report;
}

}  // namespace bilateral
