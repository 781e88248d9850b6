#include "bilateral/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

#include "bilateral/binomial.hpp"
#include "bilateral/derivation.hpp"
#include "bilateral/errors.hpp"
#include "bilateral/gamma.hpp"

namespace bilateral {

namespace {

// Margin kept between sampled arguments and gamma poles.
constexpr double kPoleMargin = 0.05;
// Offsets |j| <= 40 around the base index in the derivation checks.
constexpr int kDerivationOffsets = 40;

double integer_distance(double x) { return std::abs(x - std::round(x)); }

bool clear_of_poles(Complex z, double margin = kPoleMargin) { return pole_distance(z) >= margin; }

Complex unit_circle(double theta) { return {std::cos(theta), std::sin(theta)}; }

// a in (-2, 0) away from integers, c = a + d with d in [1.5, 3]: the domain
// shared by the series comparisons and the derivation paths.
std::pair<double, double> draw_negative_a_and_gap(SampleRng& rng, bool duplicated) {
  while (true) {
    const double a = rng.uniform(-2.0, 0.0);
    const double c = a + rng.uniform(1.5, 3.0);
    if (integer_distance(a) < kPoleMargin) continue;
    if (duplicated ? !clear_of_poles(2.0 * c) : !clear_of_poles(c)) continue;
    return {a, c};
  }
}

SubCheck with_prefix(SubCheck sc, const std::string& prefix) {
  sc.name = prefix + sc.name;
  return sc;
}

// ---------------------------------------------------------------------------
// Identity checks

// Gamma(z) through Gamma(z+m)/(z)_m with Re(z+m) >= 1/2, so that the
// reflection check does not go through the reflection branch of gamma().
Complex gamma_by_recurrence(Complex z) {
  const std::int64_t m = z.real() < 0.5 ? static_cast<std::int64_t>(std::ceil(0.5 - z.real())) : 0;
  return gamma(z + static_cast<double>(m)) / pochhammer(z, m);
}

VerificationReport check_legendre_selftest(const ParameterPoint& p, const SuiteConfig&) {
  constexpr double kTol = 1e-11;
  const Complex z = lookup(p, "z");
  const Complex g = gamma(z);
  const Complex g1 = gamma(z + 1.0);
  std::vector<SubCheck> checks;
  checks.push_back(make_subcheck("recurrence", std::abs(g1 - z * g) / std::abs(g1), kTol));
  const Complex reflected = gamma_by_recurrence(z) * gamma_by_recurrence(1.0 - z) * sin_pi(z) / kPi;
  checks.push_back(make_subcheck("reflection", std::abs(reflected - 1.0), kTol));
  checks.push_back(make_subcheck("legendre", legendre_residual(z), kTol));
  checks.push_back(make_subcheck("reciprocal", std::abs(rgamma(z) * g - 1.0), kTol));
  return make_composite_report("legendre_selftest", p, std::move(checks));
}

VerificationReport check_pascal_plane(const ParameterPoint& p, const SuiteConfig&) {
  constexpr double kTol = 1e-9;
  const Complex x = lookup(p, "x");
  const Complex y = lookup(p, "y");
  const Complex b = binom(x, y);
  const Complex left = binom(x - 1.0, y - 1.0);
  const Complex right = binom(x - 1.0, y);
  const double scale = std::max({std::abs(b), std::abs(left), std::abs(right)});
  std::vector<SubCheck> checks;
  checks.push_back(make_subcheck("pascal_recurrence", std::abs(b - left - right) / scale, kTol));
  checks.push_back(make_subcheck("symmetry", symmetric_residual(b, binom(x, x - y)), kTol));
  return make_composite_report("eq4_pascal_plane", p, std::move(checks));
}

VerificationReport check_h11_series(const ParameterPoint& p, const SuiteConfig& cfg) {
  constexpr double kTol = 1e-5;
  const Complex a = lookup(p, "a");
  const Complex c = lookup(p, "c");
  const Complex z = unit_circle(lookup(p, "theta").real());
  const SeriesValue sv = eval_bilateral({{a}, {c}, z}, cfg.budget());
  const Complex closed = cf_bilateral_binomial(a, c, z);
  VerificationReport r = make_report("eq3_series_vs_closed", p, relative_residual(sv.value, closed), kTol,
                                     sv.converged ? "" : "tail bound above rel_tol at max half-width");
  r.n_terms_used = sv.n_terms;
  return r;
}

VerificationReport check_duplication_series(const ParameterPoint& p, const SuiteConfig& cfg) {
  constexpr double kTol = 1e-5;
  const Complex a = lookup(p, "a");
  const Complex c = lookup(p, "c");
  const Complex z = unit_circle(lookup(p, "theta").real());
  const SeriesValue sv = eval_bilateral({{a, a + 0.5}, {c, c + 0.5}, z}, cfg.budget());
  const Complex closed = cf_duplication(a, c, z);
  VerificationReport r = make_report("eq12_series_vs_closed", p, relative_residual(sv.value, closed), kTol,
                                     sv.converged ? "" : "tail bound above rel_tol at max half-width");
  r.n_terms_used = sv.n_terms;
  return r;
}

VerificationReport check_branch_independence(const ParameterPoint& p, const SuiteConfig&) {
  const Complex a = lookup(p, "a");
  const Complex c = lookup(p, "c");
  const Complex z = lookup(p, "z");
  const Complex plus = cf_duplication(a, c, z, Branch::plus);
  const Complex minus = cf_duplication(a, c, z, Branch::minus);
  return make_report("eq12_branch_independence", p, symmetric_residual(plus, minus), 1e-12);
}

VerificationReport check_unit_value_vs_dougall(const ParameterPoint& p, const SuiteConfig&) {
  const Complex a = lookup(p, "a");
  const Complex c = lookup(p, "c");
  const Complex dougall = cf_dougall(a, a + 0.5, c, c + 0.5);
  return make_report("eq19_vs_eq2", p, relative_residual(cf_unit_value(a, c), dougall), 1e-12);
}

VerificationReport check_dougall_series(const ParameterPoint& p, const SuiteConfig& cfg) {
  constexpr double kTol = 1e-5;
  const Complex a = lookup(p, "a");
  const Complex b = lookup(p, "b");
  const Complex c = lookup(p, "c");
  const Complex d = lookup(p, "d");
  const SeriesValue sv = eval_bilateral({{a, b}, {c, d}, Complex(1.0, 0.0)}, cfg.budget());
  VerificationReport r = make_report("eq2_dougall_series", p, relative_residual(sv.value, cf_dougall(a, b, c, d)),
                                     kTol, sv.converged ? "" : "tail bound above rel_tol at max half-width");
  r.n_terms_used = sv.n_terms;
  return r;
}

VerificationReport check_minus_one(const ParameterPoint& p, const SuiteConfig& cfg) {
  const Complex a = lookup(p, "a");
  const Complex c = lookup(p, "c");
  const Complex special = cf_minus_one(a, c, cfg.minus_one_exponent_shift);
  const Complex general = cf_duplication(a, c, Complex(-1.0, 0.0), Branch::plus);
  return make_report("eq23_vs_eq12_at_minus1", p, relative_residual(special, general), 1e-12);
}

VerificationReport check_reduction(const ParameterPoint& p, const SuiteConfig& cfg) {
  const Complex a = lookup(p, "a");
  const SeriesValue sv = eval_bilateral({{a, a + 0.5}, {Complex(0.5, 0.0), Complex(1.0, 0.0)}, Complex(-1.0, 0.0)},
                                        cfg.budget());
  const Complex unilateral = eval_2f1_minus1(a, a + 0.5, Complex(0.5, 0.0));
  const Complex special = cf_minus_one(a, Complex(0.5, 0.0), cfg.minus_one_exponent_shift);
  const Complex trig = kummer_half_trig(a);
  std::vector<SubCheck> checks;
  checks.push_back(make_subcheck("bilateral_vs_unilateral", relative_residual(sv.value, unilateral), 1e-5));
  checks.push_back(make_subcheck("unilateral_vs_special_case", relative_residual(unilateral, special), 1e-9));
  checks.push_back(make_subcheck("special_case_vs_trig", relative_residual(special, trig), 1e-9));
  VerificationReport r = make_composite_report("eq24_reduction", p, std::move(checks));
  r.n_terms_used = sv.n_terms;
  return r;
}

VerificationReport check_kummer_sum(const ParameterPoint& p, const SuiteConfig&) {
  const Complex a = lookup(p, "a");
  const Complex b = lookup(p, "b");
  const Complex series = eval_2f1_minus1(a, b, a - b + 1.0);
  return make_report("eq25_kummer_sum", p, symmetric_residual(kummer_sum(a, b), series), 1e-9);
}

VerificationReport check_kummer_chain(const ParameterPoint& p, const SuiteConfig&) {
  constexpr double kTol = 1e-9;
  const Complex a = lookup(p, "a");
  const std::array<Complex, 4> values = {kummer_half(a), kummer_sum(a, a + 0.5),
                                         eval_2f1_minus1(a, a + 0.5, Complex(0.5, 0.0)), kummer_half_trig(a)};
  double worst = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    for (std::size_t j = i + 1; j < values.size(); ++j) worst = std::max(worst, symmetric_residual(values[i], values[j]));
  }
  std::vector<SubCheck> checks{make_subcheck("pairwise", worst, kTol)};
  if (a == Complex(0.0, 0.0) || a == Complex(1.0, 0.0)) {
    const Complex expected = a == Complex(0.0, 0.0) ? Complex(1.0, 0.0) : Complex(0.0, 0.0);
    double gap = 0.0;
    for (const Complex& v : values) gap = std::max(gap, std::abs(v - expected));
    checks.push_back(make_subcheck("exact_value", gap, 0.0));
  }
  return make_composite_report("eq26_kummer_chain", p, std::move(checks));
}

// The end-to-end series identity must actually run inside the sampled domain.
std::vector<SubCheck> require_applicable(std::vector<SubCheck> checks) {
  for (SubCheck& sc : checks) {
    if (sc.status == CheckStatus::not_applicable && sc.name.ends_with("end_to_end")) {
      sc.status = CheckStatus::error;
    }
  }
  return checks;
}

VerificationReport check_sum_path_identity(const ParameterPoint& p, const SuiteConfig& cfg) {
  const DerivationPoint pt = sum_path_point(lookup(p, "a"), lookup(p, "c"), unit_circle(lookup(p, "phi").real()),
                                            kDerivationOffsets);
  VerificationReport cancel = check_sum_cancellation(pt);
  VerificationReport path = check_sum_path(pt, cfg.budget());
  std::vector<SubCheck> checks = cancel.subchecks;
  checks.insert(checks.end(), path.subchecks.begin(), path.subchecks.end());
  VerificationReport r = make_composite_report("eq11_sum_path", p, require_applicable(std::move(checks)));
  r.n_terms_used = path.n_terms_used;
  return r;
}

VerificationReport check_diff_path_identity(const ParameterPoint& p, const SuiteConfig& cfg) {
  const Complex a = lookup(p, "a");
  const Complex c = lookup(p, "c");
  const Complex z = unit_circle(lookup(p, "phi").real());
  const DerivationPoint pt = diff_path_point(a, c, z, kDerivationOffsets);
  VerificationReport cancel = check_diff_cancellation(pt);
  VerificationReport path = check_diff_path(pt, cfg.budget());
  VerificationReport agree = check_paths_agree(a, c, z, cfg.budget());
  std::vector<SubCheck> checks = cancel.subchecks;
  checks.insert(checks.end(), path.subchecks.begin(), path.subchecks.end());
  for (const SubCheck& sc : agree.subchecks) checks.push_back(with_prefix(sc, "paths_agree."));
  VerificationReport r = make_composite_report("eq18_diff_path", p, require_applicable(std::move(checks)));
  r.n_terms_used = path.n_terms_used;
  return r;
}

// ---------------------------------------------------------------------------
// Samplers

ParameterPoint sample_gamma_point(SampleRng& rng, int) {
  while (true) {
    const double r = 10.0 * std::sqrt(rng.unit());
    const double angle = rng.uniform(-kPi, kPi);
    const Complex z = std::polar(r, angle);
    if (pole_distance(z) < 0.1 || pole_distance(z + 0.5) < 0.1 || pole_distance(2.0 * z) < 0.1) continue;
    if (std::abs(z.imag()) < 0.1 && integer_distance(z.real()) < 0.1) continue;
    return {{"z", z}};
  }
}

ParameterPoint sample_pascal_point(SampleRng& rng, int) {
  while (true) {
    const Complex x(rng.uniform(-5.0, 5.0), rng.uniform(-1.0, 1.0));
    const Complex y(rng.uniform(-5.0, 5.0), rng.uniform(-1.0, 1.0));
    if (std::abs(x) > 5.0 || std::abs(y) > 5.0) continue;
    const std::array<Complex, 6> args = {x + 1.0, y + 1.0, x - y + 1.0, x, y, x - y};
    if (!std::all_of(args.begin(), args.end(), [](Complex w) { return clear_of_poles(w, 0.1); })) continue;
    return {{"x", x}, {"y", y}};
  }
}

ParameterPoint sample_h11_point(SampleRng& rng, int) {
  auto [a, c] = draw_negative_a_and_gap(rng, false);
  return {{"a", a}, {"c", c}, {"theta", rng.uniform(0.2, kPi)}};
}

ParameterPoint sample_duplication_point(SampleRng& rng, int) {
  auto [a, c] = draw_negative_a_and_gap(rng, true);
  return {{"a", a}, {"c", c}, {"theta", rng.uniform(0.2, kPi)}};
}

ParameterPoint sample_path_point(SampleRng& rng, int) {
  auto [a, c] = draw_negative_a_and_gap(rng, true);
  return {{"a", a}, {"c", c}, {"phi", rng.uniform(0.1, 3.0)}};
}

bool duplication_prefactor_clear(Complex a, Complex c) {
  return clear_of_poles(2.0 * c) && clear_of_poles(1.0 - 2.0 * a) && clear_of_poles(2.0 * c - 2.0 * a);
}

ParameterPoint sample_branch_point(SampleRng& rng, int) {
  while (true) {
    const Complex a(rng.uniform(-2.0, 1.0), rng.uniform(-0.5, 0.5));
    const Complex c = a + Complex(rng.uniform(0.5, 3.0), rng.uniform(-0.5, 0.5));
    const double angle = rng.uniform(0.1, 3.0) * (rng.unit() < 0.5 ? -1.0 : 1.0);
    const Complex z = std::polar(rng.uniform(0.25, 4.0), angle);
    if (!duplication_prefactor_clear(a, c)) continue;
    return {{"a", a}, {"c", c}, {"z", z}};
  }
}

ParameterPoint sample_unit_value_point(SampleRng& rng, int) {
  while (true) {
    const Complex a(rng.uniform(-2.0, 0.4), rng.uniform(-0.5, 0.5));
    const Complex c = a + Complex(rng.uniform(0.75, 3.0), rng.uniform(-0.5, 0.5));
    const std::array<Complex, 5> numerators = {c, c + 0.5, 1.0 - a, 0.5 - a, 2.0 * c - 2.0 * a - 1.0};
    if (!std::all_of(numerators.begin(), numerators.end(), [](Complex w) { return clear_of_poles(w); })) continue;
    if (!duplication_prefactor_clear(a, c)) continue;
    return {{"a", a}, {"c", c}};
  }
}

ParameterPoint sample_dougall_point(SampleRng& rng, int) {
  while (true) {
    const double a = rng.uniform(-2.0, 0.0);
    const double b = rng.uniform(-2.0, 0.0);
    const double c = a + rng.uniform(1.5, 3.0);
    const double d = b + rng.uniform(1.5, 3.0);
    if (integer_distance(a) < kPoleMargin || integer_distance(b) < kPoleMargin) continue;
    if (!clear_of_poles(c) || !clear_of_poles(d)) continue;
    return {{"a", a}, {"b", b}, {"c", c}, {"d", d}};
  }
}

ParameterPoint sample_minus_one_point(SampleRng& rng, int) {
  while (true) {
    const Complex a(rng.uniform(-2.0, 1.0), rng.uniform(-0.3, 0.3));
    const Complex c = a + Complex(rng.uniform(0.75, 3.0), rng.uniform(-0.3, 0.3));
    if (!duplication_prefactor_clear(a, c)) continue;
    if (std::abs(cos_pi((2.0 * c + 2.0 * a - 1.0) / 4.0)) < 0.05) continue;
    return {{"a", a}, {"c", c}};
  }
}

ParameterPoint sample_reduction_point(SampleRng& rng, int) {
  while (true) {
    const double a = rng.uniform(-2.0, -0.25);
    if (std::abs(cos_pi(0.5 * a)) < 0.05) continue;
    return {{"a", a}};
  }
}

ParameterPoint sample_kummer_sum_point(SampleRng& rng, int) {
  while (true) {
    const double a = rng.uniform(-1.5, 2.0);
    const double b = rng.uniform(-1.5, 1.5);
    const std::array<Complex, 4> args = {a - b + 1.0, 0.5 * a + 1.0, a + 1.0, 0.5 * a - b + 1.0};
    if (!std::all_of(args.begin(), args.end(), [](Complex w) { return clear_of_poles(w); })) continue;
    return {{"a", a}, {"b", b}};
  }
}

ParameterPoint sample_kummer_chain_point(SampleRng& rng, int index) {
  if (index == 0) return {{"a", 0.0}};
  if (index == 1) return {{"a", 1.0}};
  return {{"a", rng.uniform(-2.0, 1.0)}};
}

std::vector<Identity> build_registry() {
  std::vector<Identity> r;
  r.push_back({"legendre_selftest", "gamma recurrence, reflection, reciprocal and Legendre duplication", 1e-11,
               sample_gamma_point, check_legendre_selftest});
  r.push_back({"eq4_pascal_plane", "Pascal recurrence and symmetry of the generalized binomial coefficient", 1e-9,
               sample_pascal_point, check_pascal_plane});
  r.push_back({"eq3_series_vs_closed", "1H1 series on the unit circle against the bilateral binomial theorem", 1e-5,
               sample_h11_point, check_h11_series});
  r.push_back({"eq12_series_vs_closed", "2H2[a, a+1/2; c, c+1/2; z] series against the duplication formula", 1e-5,
               sample_duplication_point, check_duplication_series});
  r.push_back({"eq12_branch_independence", "duplication formula with both square roots of z", 1e-12,
               sample_branch_point, check_branch_independence});
  r.push_back({"eq2_dougall_series", "2H2 series at z = 1 against Dougall's gamma bracket", 1e-5,
               sample_dougall_point, check_dougall_series});
  r.push_back({"eq19_vs_eq2", "unit-argument duplication value against Dougall's bracket", 1e-12,
               sample_unit_value_point, check_unit_value_vs_dougall});
  r.push_back({"eq23_vs_eq12_at_minus1", "cosine form at z = -1 against the duplication formula", 1e-12,
               sample_minus_one_point, check_minus_one});
  r.push_back({"eq24_reduction", "2H2 at c = 1/2, z = -1 against the unilateral 2F1 and the cosine form", 1.0,
               sample_reduction_point, check_reduction});
  r.push_back({"eq25_kummer_sum", "Kummer's sum against the 2F1(-1) series", 1e-9, sample_kummer_sum_point,
               check_kummer_sum});
  r.push_back({"eq26_kummer_chain", "gamma form, Kummer sum, 2F1 series and 2^{-a} cos(pi a/2) agree", 1.0,
               sample_kummer_chain_point, check_kummer_chain});
  r.push_back({"eq11_sum_path", "sum-path derivation: odd cancellation, coefficients, ratios, end-to-end", 1.0,
               sample_path_point, check_sum_path_identity});
  r.push_back({"eq18_diff_path", "difference-path derivation, plus agreement with the sum path", 1.0,
               sample_path_point, check_diff_path_identity});
  return r;
}

// ---------------------------------------------------------------------------
// Targets

Complex param(const ParamMap& p, const std::string& name) { return p.at(name); }

std::int64_t integer_param(const ParamMap& p, const std::string& name) {
  const Complex v = p.at(name);
  if (v.imag() != 0.0 || v.real() != std::round(v.real()) || std::abs(v.real()) > 1e9) {
    throw PreconditionError("parameter " + name + " must be an integer");
  }
  return static_cast<std::int64_t>(v.real());
}

TargetResult closed(Complex v) { return {v, std::nullopt}; }

TargetResult series(const SeriesValue& sv) { return {sv.value, sv}; }

std::vector<Target> build_targets() {
  using K = TargetKind;
  std::vector<Target> t;
  t.push_back({"gamma", K::closed, {"z"}, "Gamma(z)",
               [](const ParamMap& p, const EvalOptions&) { return closed(gamma(param(p, "z"))); }});
  t.push_back({"log_gamma", K::closed, {"z"}, "principal log Gamma(z)",
               [](const ParamMap& p, const EvalOptions&) { return closed(log_gamma(param(p, "z"))); }});
  t.push_back({"rgamma", K::closed, {"z"}, "1/Gamma(z)",
               [](const ParamMap& p, const EvalOptions&) { return closed(rgamma(param(p, "z"))); }});
  t.push_back({"legendre_residual", K::closed, {"z"}, "relative residual of Legendre duplication",
               [](const ParamMap& p, const EvalOptions&) { return closed(legendre_residual(param(p, "z"))); }});
  t.push_back({"pochhammer", K::closed, {"a", "k"}, "(a)_k for integer k of either sign",
               [](const ParamMap& p, const EvalOptions&) {
                 return closed(pochhammer(param(p, "a"), integer_param(p, "k")));
               }});
  t.push_back({"binom", K::closed, {"x", "y"}, "Pascal-plane binomial coefficient",
               [](const ParamMap& p, const EvalOptions&) { return closed(binom(param(p, "x"), param(p, "y"))); }});
  t.push_back({"binom_row_ratio", K::closed, {"n", "k", "step"}, "binom(n, k+step) / binom(n, k)",
               [](const ParamMap& p, const EvalOptions&) {
                 return closed(binom_row_ratio(param(p, "n"), param(p, "k"),
                                               static_cast<int>(integer_param(p, "step"))));
               }});
  t.push_back({"cf_bilateral_binomial", K::closed, {"a", "c", "z"}, "closed form of 1H1[a; c; z]",
               [](const ParamMap& p, const EvalOptions&) {
                 return closed(cf_bilateral_binomial(param(p, "a"), param(p, "c"), param(p, "z")));
               }});
  t.push_back({"cf_duplication", K::closed, {"a", "c", "z"}, "closed form of 2H2[a, a+1/2; c, c+1/2; z]",
               [](const ParamMap& p, const EvalOptions& o) {
                 return closed(cf_duplication(param(p, "a"), param(p, "c"), param(p, "z"), o.branch));
               }});
  t.push_back({"cf_dougall", K::closed, {"a", "b", "c", "d"}, "2H2[a, b; c, d; 1] by Dougall's bracket",
               [](const ParamMap& p, const EvalOptions&) {
                 return closed(cf_dougall(param(p, "a"), param(p, "b"), param(p, "c"), param(p, "d")));
               }});
  t.push_back({"cf_unit_value", K::closed, {"a", "c"}, "2H2[a, a+1/2; c, c+1/2; 1]",
               [](const ParamMap& p, const EvalOptions&) {
                 return closed(cf_unit_value(param(p, "a"), param(p, "c")));
               }});
  t.push_back({"cf_minus_one", K::closed, {"a", "c"}, "2H2[a, a+1/2; c, c+1/2; -1]",
               [](const ParamMap& p, const EvalOptions&) {
                 return closed(cf_minus_one(param(p, "a"), param(p, "c")));
               }});
  t.push_back({"kummer_sum", K::closed, {"a", "b"}, "2F1[a, b; a-b+1; -1] by Kummer's sum",
               [](const ParamMap& p, const EvalOptions&) {
                 return closed(kummer_sum(param(p, "a"), param(p, "b")));
               }});
  t.push_back({"kummer_half", K::closed, {"a"}, "2F1[a, a+1/2; 1/2; -1], gamma form",
               [](const ParamMap& p, const EvalOptions&) { return closed(kummer_half(param(p, "a"))); }});
  t.push_back({"kummer_half_trig", K::closed, {"a"}, "2^{-a} cos(pi a / 2)",
               [](const ParamMap& p, const EvalOptions&) { return closed(kummer_half_trig(param(p, "a"))); }});

  t.push_back({"h11", K::series, {"a", "c", "z"}, "1H1[a; c; z] by direct summation",
               [](const ParamMap& p, const EvalOptions& o) {
                 return series(eval_bilateral({{param(p, "a")}, {param(p, "c")}, param(p, "z")}, o.budget));
               }});
  t.push_back({"h22", K::series, {"a", "b", "c", "d", "z"}, "2H2[a, b; c, d; z] by direct summation",
               [](const ParamMap& p, const EvalOptions& o) {
                 return series(eval_bilateral(
                     {{param(p, "a"), param(p, "b")}, {param(p, "c"), param(p, "d")}, param(p, "z")}, o.budget));
               }});
  t.push_back({"h22_dup", K::series, {"a", "c", "z"}, "2H2[a, a+1/2; c, c+1/2; z] by direct summation",
               [](const ParamMap& p, const EvalOptions& o) {
                 const Complex a = param(p, "a");
                 const Complex c = param(p, "c");
                 return series(eval_bilateral({{a, a + 0.5}, {c, c + 0.5}, param(p, "z")}, o.budget));
               }});
  t.push_back({"f21_minus1", K::series, {"a", "b", "c"}, "2F1(a, b; c; -1) via the Pfaff transformation",
               [](const ParamMap& p, const EvalOptions&) {
                 return series(eval_2f1_minus1_series(param(p, "a"), param(p, "b"), param(p, "c")));
               }});
  return t;
}

}  // namespace

void validate(const SuiteConfig& config) {
  if (!(config.rel_tol > 0.0)) throw PreconditionError("rel_tol must be positive");
  if (config.max_half_width < 1) throw PreconditionError("max_half_width must be at least 1");
  if (config.sample_count < 1) throw PreconditionError("sample_count must be at least 1");
}

SampleRng::SampleRng(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  engine_.seed(seq);
}

double SampleRng::unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

Complex lookup(const ParameterPoint& point, std::string_view name) {
  for (const NamedValue& nv : point) {
    if (nv.name == name) return nv.value;
  }
  throw UsageError("parameter point has no value named " + std::string(name));
}

const std::vector<Identity>& identity_registry() {
  static const std::vector<Identity> registry = build_registry();
  return registry;
}

const Identity* find_identity(std::string_view id) {
  for (const Identity& identity : identity_registry()) {
    if (identity.id == id) return &identity;
  }
  return nullptr;
}

std::vector<ParameterPoint> sample_points(const Identity& identity, const SuiteConfig& config) {
  // FNV-1a of the id: std::hash is not stable across standard libraries.
  std::uint64_t stream = 1469598103934665603ull;
  for (unsigned char ch : identity.id) stream = (stream ^ ch) * 1099511628211ull;
  SampleRng rng(config.rng_seed, stream);
  std::vector<ParameterPoint> points;
  points.reserve(static_cast<std::size_t>(config.sample_count));
  for (int i = 0; i < config.sample_count; ++i) points.push_back(identity.sample(rng, i));
  return points;
}

VerificationReport run_check(const Identity& identity, const ParameterPoint& point, const SuiteConfig& config) {
  try {
    return identity.check(point, config);
  } catch (const std::exception& e) {
    return make_error_report(identity.id, point, identity.tolerance, e.what());
  }
}

SuiteResult run_suite(const SuiteConfig& config) {
  validate(config);
  std::vector<const Identity*> selected;
  if (config.identity_filter.empty()) {
    for (const Identity& identity : identity_registry()) selected.push_back(&identity);
  } else {
    for (const Identity& identity : identity_registry()) {
      if (std::find(config.identity_filter.begin(), config.identity_filter.end(), identity.id) !=
          config.identity_filter.end()) {
        selected.push_back(&identity);
      }
    }
    for (const std::string& id : config.identity_filter) {
      if (!find_identity(id)) throw UsageError("unknown identity id: " + id);
    }
  }

  struct Task {
    const Identity* identity;
    ParameterPoint point;
    std::size_t index;
  };
  std::vector<Task> tasks;
  for (const Identity* identity : selected) {
    std::vector<ParameterPoint> points = sample_points(*identity, config);
    for (std::size_t i = 0; i < points.size(); ++i) tasks.push_back({identity, std::move(points[i]), i});
  }

  SuiteResult result;
  result.entries.resize(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      result.entries[i] = {run_check(*tasks[i].identity, tasks[i].point, config), tasks[i].index};
    }
  };
  unsigned n_threads = config.threads ? config.threads : std::max(1u, std::thread::hardware_concurrency());
  n_threads = static_cast<unsigned>(std::min<std::size_t>(n_threads, std::max<std::size_t>(1, tasks.size())));
  std::vector<std::jthread> pool;
  for (unsigned t = 1; t < n_threads; ++t) pool.emplace_back(worker);
  worker();
  pool.clear();

  for (const SuiteEntry& e : result.entries) (e.report.passed ? result.passed : result.failed)++;
  return result;
}

const std::vector<Target>& target_registry() {
  static const std::vector<Target> targets = build_targets();
  return targets;
}

const Target* find_target(std::string_view name) {
  for (const Target& t : target_registry()) {
    if (t.name == name) return &t;
  }
  return nullptr;
}

TargetResult evaluate_target(const Target& target, const ParamMap& params, const EvalOptions& options) {
  for (const std::string& name : target.params) {
    if (!params.contains(name)) {
      throw UsageError("target " + target.name + " needs parameter " + name);
    }
  }
  return target.evaluate(params, options);
}

}  // namespace bilateral
