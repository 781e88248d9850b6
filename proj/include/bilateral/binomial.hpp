#pragma once

#include "bilateral/complex_math.hpp"

namespace bilateral {

/// A point (x, y) of the Pascal plane: upper index x, lower index y.
struct PlanePoint {
  Complex x;
  Complex y;
};

/// Generalized binomial coefficient
///
///   binom(x, y) = lim_{h->0} Gamma(x+1+h) / (Gamma(y+1+h) Gamma(x-y+1+h)).
///
/// Pole-free points are evaluated directly in log space. When only
/// denominator arguments are at poles the value is exactly zero. When the
/// numerator and exactly one denominator argument are at poles the limit is
/// taken numerically (h = 1e-5 and 5e-6, one Richardson step, ~1e-7
/// accurate). A numerator pole that is not cancelled throws
/// LimitDivergesError.
Complex binom(PlanePoint p);

inline Complex binom(Complex x, Complex y) { return binom(PlanePoint{x, y}); }

/// binom(n, k + step) / binom(n, k) as a product of linear factors, without
/// any gamma evaluation. Throws PoleError if a denominator factor vanishes.
Complex binom_row_ratio(Complex n, Complex k, int step);

}  // namespace bilateral
