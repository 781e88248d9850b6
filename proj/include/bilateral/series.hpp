#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "bilateral/complex_math.hpp"

namespace bilateral {

/// Parameters of a bilateral series pHp[a_1..a_p; c_1..c_p; z] with
/// term_k = prod (a_i)_k / prod (c_i)_k * z^k for k in Z.
struct BilateralParams {
  std::vector<Complex> a_list;
  std::vector<Complex> c_list;
  Complex z;
};

struct SeriesValue {
  Complex value;
  std::int64_t n_terms = 0;  // truncation half-width N
  double tail_bound = 0.0;
  bool converged = false;
};

struct ConvergenceBudget {
  double rel_tol = 1e-6;
  std::int64_t max_half_width = 200000;
};

/// Throws PreconditionError unless p = |a_list| = |c_list| is 1 or 2 and ||z| - 1| <= 1e-9.
void validate_shape(const BilateralParams& params);

/// Throws PreconditionError unless: p = |a_list| = |c_list| in {1, 2}; no a_i is
/// a positive integer and no c_i a nonpositive integer (within 1e-9); and
/// ||z| - 1| <= 1e-9.
void validate(const BilateralParams& params);
void validate(const ConvergenceBudget& budget);

/// Algebraic decay exponent s = Re(sum c - sum a); |term_k| ~ |k|^{-s}.
double decay_exponent(const BilateralParams& params);

/// The k-th term, built as a running product of per-step ratios so that large
/// |k| neither overflows nor calls the gamma function. Only the shape is
/// validated; a term that meets a Pochhammer pole throws PoleError.
Complex series_term(const BilateralParams& params, std::int64_t k);

/// Symmetric partial sums over [-N, N] with N = 64, 128, ... until the
/// integral tail estimate (2/(s-1)) * N * max(|term_N|, |term_-N|) drops below
/// rel_tol * |sum| or N reaches budget.max_half_width. Throws DivergenceError
/// unless s > 1.
SeriesValue eval_bilateral(const BilateralParams& params, const ConvergenceBudget& budget = {});

/// 2F1(a, b; c; -1) through the Pfaff transformation
/// 2F1(a, b; c; -1) = 2^{-a} 2F1(a, c-b; c; 1/2).
Complex eval_2f1_minus1(Complex a, Complex b, Complex c);

/// The same sum with its term count (n_terms) and an estimate of the dropped remainder.
SeriesValue eval_2f1_minus1_series(Complex a, Complex b, Complex c);

/// Neumaier-compensated complex accumulator.
class CompensatedSum {
 public:
  void add(Complex x) {
    add_component(x.real(), re_, re_err_);
    add_component(x.imag(), im_, im_err_);
  }
  Complex value() const { return {re_ + re_err_, im_ + im_err_}; }

 private:
  static void add_component(double x, double& sum, double& err) {
    double t = sum + x;
    if (std::abs(sum) >= std::abs(x)) {
      err += (sum - t) + x;
    } else {
      err += (x - t) + sum;
    }
    sum = t;
  }

  double re_ = 0.0, re_err_ = 0.0;
  double im_ = 0.0, im_err_ = 0.0;
};

}  // namespace bilateral
