#pragma once

// Shared helpers for the unit tests: relative comparison and a small seeded
// generator for property tests.

#include <cmath>
#include <cstdint>
#include <random>

#include <doctest.h>

#include "bilateral/complex_math.hpp"

namespace testing {

using bilateral::Complex;

inline double rel_err(Complex value, Complex reference) {
  const double scale = std::abs(reference);
  return scale == 0.0 ? std::abs(value) : std::abs(value - reference) / scale;
}

#define CHECK_REL(value, reference, tol)                                                        \
  do {                                                                                          \
    const ::bilateral::Complex check_rel_v_ = (value);                                          \
    const ::bilateral::Complex check_rel_r_ = (reference);                                      \
    INFO("value = " << check_rel_v_ << ", reference = " << check_rel_r_);                       \
    CHECK(::testing::rel_err(check_rel_v_, check_rel_r_) <= (tol));                             \
  } while (0)

/// Property-test generator. Every property fixes its own seed so failures
/// reproduce; the trial index is reported through INFO by the caller.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : engine_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(engine_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }
  bool coin() { return integer(0, 1) == 1; }

  /// Uniform on the disk |z| <= r.
  Complex disk(double r) {
    const double rho = r * std::sqrt(uniform(0.0, 1.0));
    return std::polar(rho, uniform(-M_PI, M_PI));
  }

  Complex unit() { return std::polar(1.0, uniform(-M_PI, M_PI)); }

  Complex box(double re_lo, double re_hi, double im_lo, double im_hi) {
    return {uniform(re_lo, re_hi), uniform(im_lo, im_hi)};
  }

  /// Real value in [lo, hi] at least `margin` from every integer.
  double non_integer(double lo, double hi, double margin = 0.05) {
    while (true) {
      const double x = uniform(lo, hi);
      if (std::abs(x - std::round(x)) >= margin) return x;
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace testing
