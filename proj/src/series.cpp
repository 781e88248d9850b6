#include "bilateral/series.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "bilateral/errors.hpp"

namespace bilateral {

namespace {

constexpr std::int64_t kInitialHalfWidth = 64;
constexpr int kRenormalizeEvery = 32;

// Ratio term_{k+1} / term_k without the power of z.
Complex forward_ratio(const BilateralParams& p, std::int64_t k) {
  const double kk = static_cast<double>(k);
  Complex r(1.0, 0.0);
  for (std::size_t i = 0; i < p.a_list.size(); ++i) {
    Complex denominator = p.c_list[i] + kk;
    if (std::abs(denominator) <= kPoleTolerance) throw PoleError("series term pole for positive index");
    r *= (p.a_list[i] + kk) / denominator;
  }
  return r;
}

// Ratio term_{k-1} / term_k without the power of z.
Complex backward_ratio(const BilateralParams& p, std::int64_t k) {
  const double kk = static_cast<double>(k) - 1.0;
  Complex r(1.0, 0.0);
  for (std::size_t i = 0; i < p.a_list.size(); ++i) {
    Complex denominator = p.a_list[i] + kk;
    if (std::abs(denominator) <= kPoleTolerance) throw PoleError("series term pole for negative index");
    r *= (p.c_list[i] + kk) / denominator;
  }
  return r;
}

}  // namespace

void validate_shape(const BilateralParams& params) {
  const std::size_t p = params.a_list.size();
  if (p != params.c_list.size()) {
    throw PreconditionError("a_list and c_list must have equal length");
  }
  if (p < 1 || p > 2) throw PreconditionError("only 1H1 and 2H2 series are supported");
  if (std::abs(std::abs(params.z) - 1.0) > 1e-9) {
    throw PreconditionError("bilateral series argument must lie on the unit circle");
  }
}

void validate(const BilateralParams& params) {
  validate_shape(params);
  for (const Complex& a : params.a_list) {
    if (near_positive_integer(a, kParameterTolerance)) {
      throw PreconditionError("numerator parameter is a positive integer");
    }
  }
  for (const Complex& c : params.c_list) {
    if (near_nonpositive_integer(c, kParameterTolerance)) {
      throw PreconditionError("denominator parameter is a nonpositive integer");
    }
  }
}

void validate(const ConvergenceBudget& budget) {
  if (!(budget.rel_tol > 0.0)) throw PreconditionError("rel_tol must be positive");
  if (budget.max_half_width < 1) throw PreconditionError("max_half_width must be at least 1");
}

double decay_exponent(const BilateralParams& params) {
  Complex s(0.0, 0.0);
  for (const Complex& c : params.c_list) s += c;
  for (const Complex& a : params.a_list) s -= a;
  return s.real();
}

Complex series_term(const BilateralParams& params, std::int64_t k) {
  validate_shape(params);
  const Complex z = to_unit(params.z);
  Complex coefficient(1.0, 0.0);
  if (k >= 0) {
    for (std::int64_t j = 0; j < k; ++j) coefficient *= forward_ratio(params, j);
  } else {
    for (std::int64_t j = 0; j > k; --j) coefficient *= backward_ratio(params, j);
  }
  return coefficient * unit_pow(z, k);
}

SeriesValue eval_bilateral(const BilateralParams& params, const ConvergenceBudget& budget) {
  validate(params);
  validate(budget);
  const double s = decay_exponent(params);
  if (!(s > 1.0)) {
    throw DivergenceError("bilateral series needs Re(sum c - sum a) > 1 for absolute convergence, got " +
                          std::to_string(s));
  }

  const Complex z = to_unit(params.z);
  const Complex z_inverse = std::conj(z);

  CompensatedSum sum;
  sum.add({1.0, 0.0});
  Complex forward_coefficient(1.0, 0.0);
  Complex backward_coefficient(1.0, 0.0);
  Complex forward_power(1.0, 0.0);
  Complex backward_power(1.0, 0.0);
  Complex last_forward(1.0, 0.0);
  Complex last_backward(1.0, 0.0);

  SeriesValue result;
  std::int64_t n = 0;
  std::int64_t target = std::min(kInitialHalfWidth, budget.max_half_width);
  while (true) {
    while (n < target) {
      forward_coefficient *= forward_ratio(params, n);
      backward_coefficient *= backward_ratio(params, -n);
      ++n;
      forward_power *= z;
      backward_power *= z_inverse;
      if (n % kRenormalizeEvery == 0) {
        forward_power /= std::abs(forward_power);
        backward_power /= std::abs(backward_power);
      }
      last_forward = forward_coefficient * forward_power;
      last_backward = backward_coefficient * backward_power;
      sum.add(last_forward);
      sum.add(last_backward);
    }
    const double edge = std::max(std::abs(last_forward), std::abs(last_backward));
    result.value = sum.value();
    result.n_terms = n;
    result.tail_bound = (2.0 / (s - 1.0)) * static_cast<double>(n) * edge;
    result.converged = result.tail_bound <= budget.rel_tol * std::abs(result.value);
    if (result.converged || n >= budget.max_half_width) break;
    target = std::min(2 * n, budget.max_half_width);
  }
  if (!std::isfinite(result.value.real()) || !std::isfinite(result.value.imag())) {
    throw OverflowError("bilateral partial sum overflowed");
  }
  return result;
}

SeriesValue eval_2f1_minus1_series(Complex a, Complex b, Complex c) {
  if (near_nonpositive_integer(c, kParameterTolerance)) {
    throw PoleError("2F1 denominator parameter at a nonpositive integer");
  }
  constexpr int kMaxTerms = 100000;
  constexpr int kQuietTermsRequired = 3;
  constexpr double kTermTolerance = 1e-15;

  const Complex b_pfaff = c - b;
  CompensatedSum sum;
  Complex term(1.0, 0.0);
  sum.add(term);
  int quiet = 0;
  for (int j = 0; j < kMaxTerms; ++j) {
    const double jj = static_cast<double>(j);
    term *= (a + jj) * (b_pfaff + jj) / ((c + jj) * (jj + 1.0)) * 0.5;
    sum.add(term);
    if (std::abs(term) <= kTermTolerance * std::abs(sum.value())) {
      if (++quiet >= kQuietTermsRequired) {
        const Complex scale = pow2(-a);
        // Term ratios tend to 1/2, so the remainder is about one more term.
        return {scale * sum.value(), j + 2, 2.0 * std::abs(scale * term), true};
      }
    } else {
      quiet = 0;
    }
  }
  throw DivergenceError("2F1(-1) series did not settle");
}

Complex eval_2f1_minus1(Complex a, Complex b, Complex c) { return eval_2f1_minus1_series(a, b, c).value; }

}  // namespace bilateral
