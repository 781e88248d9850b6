#include <cmath>

#include "bilateral/closed_forms.hpp"
#include "bilateral/errors.hpp"
#include "bilateral/gamma.hpp"
#include "bilateral/series.hpp"
#include "support.hpp"

using namespace bilateral;
using testing::Gen;

namespace {

Complex unit(double theta) { return {std::cos(theta), std::sin(theta)}; }

BilateralParams h11(Complex a, Complex c, Complex z) { return {{a}, {c}, z}; }

BilateralParams h22_dup(Complex a, Complex c, Complex z) { return {{a, a + 0.5}, {c, c + 0.5}, z}; }

}  // namespace

TEST_CASE("series_term basics") {
  CHECK(series_term(h11(-1.25, 2.25, -1.0), 0) == Complex(1.0, 0.0));
  CHECK(series_term(h22_dup(Complex(0.3, 0.2), 1.7, unit(1.0)), 0) == Complex(1.0, 0.0));
  CHECK_REL(series_term(h11(-1.0, 2.0, 1.0), 1), -0.5, 1e-15);
  // Against the signed Pochhammer definition in both directions.
  const BilateralParams p = h22_dup(Complex(-0.6, 0.1), Complex(1.3, -0.2), unit(0.8));
  for (int k : {-7, -1, 1, 5}) {
    INFO("k = " << k);
    const Complex expected = pochhammer(p.a_list[0], k) * pochhammer(p.a_list[1], k) /
                             (pochhammer(p.c_list[0], k) * pochhammer(p.c_list[1], k)) * std::pow(p.z, k);
    CHECK_REL(series_term(p, k), expected, 1e-12);
  }
}

TEST_CASE("terms decay like |k|^-s") {
  // c = 2 cuts off the negative side: (2)_k is infinite for k <= -2.
  const BilateralParams cut{{-1.25, -0.75}, {1.5, 2.0}, 1.0};
  CHECK(decay_exponent(cut) == doctest::Approx(5.5));
  const double slope_pos =
      std::log(std::abs(series_term(cut, 1000)) / std::abs(series_term(cut, 100))) / std::log(10.0);
  CHECK(std::abs(slope_pos + 5.5) <= 0.55);
  CHECK(series_term(cut, -100) == Complex(0.0, 0.0));
  CHECK(series_term(cut, -1000) == Complex(0.0, 0.0));

  const BilateralParams two_sided{{-1.25, -0.75}, {1.5, 2.25}, unit(0.4)};
  const double s = decay_exponent(two_sided);
  for (int sign : {1, -1}) {
    INFO("sign = " << sign);
    const double slope = std::log(std::abs(series_term(two_sided, sign * 1000)) /
                                  std::abs(series_term(two_sided, sign * 100))) /
                         std::log(10.0);
    CHECK(std::abs(slope + s) <= 0.1 * s);
  }
}

TEST_CASE("preconditions") {
  CHECK_THROWS_AS(validate(BilateralParams{{0.1, 0.2, 0.3}, {1.5, 1.6, 1.7}, 1.0}), PreconditionError);
  CHECK_THROWS_AS(validate(BilateralParams{{0.1}, {1.5, 1.6}, 1.0}), PreconditionError);
  CHECK_THROWS_AS(validate(h11(-0.5, 2.0, 1.01)), PreconditionError);
  CHECK_THROWS_AS(validate(h11(2.0, 4.5, 1.0)), PreconditionError);
  CHECK_THROWS_AS(validate(h11(-0.5, -1.0, 1.0)), PreconditionError);
  CHECK_NOTHROW(validate(h11(-0.5, 2.0, Complex(0.6, 0.8))));
  CHECK_THROWS_AS(validate(ConvergenceBudget{0.0, 1000}), PreconditionError);
  CHECK_THROWS_AS(validate(ConvergenceBudget{1e-6, 0}), PreconditionError);
  // s = c - a = 1 is not absolutely convergent.
  CHECK_THROWS_AS(eval_bilateral(h11(-0.5, 0.5, unit(1.0))), DivergenceError);
}

TEST_CASE("1H1 against the closed form") {
  // mpmath nsum of the bilateral series.
  const SeriesValue v = eval_bilateral(h11(-1.25, 2.25, -1.0));
  CHECK_REL(v.value, 2.1850479619101, 1e-6);
  CHECK(v.n_terms > 0);
  CHECK(v.tail_bound > 0.0);
  CHECK_REL(cf_bilateral_binomial(-1.25, 2.25, -1.0), 2.1850479619101, 1e-13);
  // z = e^{i pi/2}, a = -1, c = 2.5.
  const Complex i_expected(0.8789472907742479, 0.3640718884497819);
  CHECK_REL(eval_bilateral(h11(-1.0, 2.5, Complex(0.0, 1.0))).value, i_expected, 1e-6);
}

TEST_CASE("2H2 duplication series at reference points") {
  const double a = -1.25, c = 1.5;
  const Complex at_one = eval_bilateral(h22_dup(a, c, 1.0)).value;
  const Complex gamma_form = bilateral::gamma(2 * c) * bilateral::gamma(1 - 2 * a) /
                             bilateral::gamma(2 * c - 2 * a) * std::pow(2.0, 2 * c - 2 * a - 2);
  CHECK_REL(at_one, gamma_form, 1e-6);
  CHECK_REL(at_one, 1.4366613966964774, 1e-6);

  const Complex z = unit(kPi / 3);
  const Complex expected(1.221226718897186, 0.1584384201570769);
  CHECK_REL(eval_bilateral(h22_dup(a, c, z)).value, expected, 1e-6);
  CHECK_REL(eval_bilateral(h22_dup(a, c, -1.0)).value, 0.5580617719201575, 1e-6);

  // Complex lower parameter.
  const Complex cc(0.9, 0.2);
  CHECK_REL(eval_bilateral(h22_dup(-0.7, cc, std::exp(Complex(0.0, 2.0)))).value,
            Complex(1.028480139297142, 0.1241152815347976), 1e-6);
}

TEST_CASE("2F1 at -1") {
  CHECK(eval_2f1_minus1(0.0, 0.7, 0.5) == Complex(1.0, 0.0));
  CHECK(std::abs(eval_2f1_minus1(1.0, 1.5, 0.5)) <= 1e-15);
  const double a = 0.3;
  const Complex gamma_form = bilateral::gamma(0.5) * bilateral::gamma(a / 2 + 1) /
                             (bilateral::gamma(a + 1) * bilateral::gamma(0.5 - a / 2));
  CHECK_REL(eval_2f1_minus1(a, a + 0.5, 0.5), gamma_form, 1e-12);
  // mpmath hyp2f1 values.
  CHECK_REL(eval_2f1_minus1(1.0, 0.5, 1.5), kPi / 4, 1e-14);
  CHECK_REL(eval_2f1_minus1(2.5, -0.3, 3.8), 1.1615688350840563, 1e-13);
  CHECK_REL(eval_2f1_minus1(-1.7, -1.2, 0.5), -2.8948887377641674, 1e-13);
  CHECK_REL(eval_2f1_minus1(Complex(0.4, 0.3), 1.1, Complex(0.7, -0.2)),
            Complex(0.6896134771113419, -0.2833978141039398), 1e-13);
  CHECK(std::abs(eval_2f1_minus1(-1.2, 0.4, -0.6)) <= 1e-14);
}

TEST_CASE("property: 2F1(a, a+1/2; 1/2; -1) equals the gamma form") {
  Gen gen(0x9b05688c2b3e6c1full);
  std::vector<double> points{-1.7, -0.4, 0.3, 0.9};
  for (int i = 0; i < 20; ++i) points.push_back(gen.uniform(-2.0, 1.0));
  for (double a : points) {
    if (pole_distance(a + 1.0) < 0.01) continue;
    INFO("a = " << a);
    CHECK_REL(eval_2f1_minus1(a, a + 0.5, 0.5), kummer_half(a), 1e-10);
  }
}

TEST_CASE("property: conjugating z conjugates the sum for real parameters") {
  Gen gen(0x1f83d9abfb41bd6bull);
  for (int trial = 0; trial < 20; ++trial) {
    const double a = gen.non_integer(-2.0, 0.0);
    const double c = a + gen.uniform(1.5, 3.0);
    const Complex z = unit(gen.uniform(0.2, kPi));
    INFO("a = " << a << ", c = " << c << ", z = " << z);
    const BilateralParams p = gen.coin() ? h11(a, c, z) : h22_dup(a, c, z);
    BilateralParams q = p;
    q.z = std::conj(z);
    CHECK_REL(eval_bilateral(q).value, std::conj(eval_bilateral(p).value), 1e-12);
  }
}

TEST_CASE("property: tail bound is monotone in N and honest when converged") {
  Gen gen(0x5be0cd19137e2179ull);
  for (int trial = 0; trial < 20; ++trial) {
    const double a = gen.non_integer(-2.0, 0.0);
    const double c = a + gen.uniform(1.5, 3.0);
    const BilateralParams p = h11(a, c, unit(gen.uniform(0.2, kPi)));
    INFO("a = " << a << ", c = " << c);
    double previous = INFINITY;
    for (std::int64_t n = 64; n <= 16384; n *= 2) {
      const SeriesValue v = eval_bilateral(p, {1e-300, n});
      CHECK(v.n_terms == n);
      CHECK(v.tail_bound <= previous);
      previous = v.tail_bound;
    }
    const SeriesValue v = eval_bilateral(p, {1e-4, 200000});
    if (v.converged) CHECK(v.tail_bound <= 1e-4 * std::abs(v.value));
  }
}

TEST_CASE("property: 1H1 and 2H2 against the closed forms") {
  Gen gen(0xcbbb9d5dc1059ed8ull);
  for (int trial = 0; trial < 20; ++trial) {
    const double a = gen.non_integer(-2.0, 0.0);
    const double c = a + gen.uniform(1.5, 3.0);
    const Complex z = unit(gen.uniform(0.2, kPi));
    INFO("a = " << a << ", c = " << c << ", z = " << z);
    if (pole_distance(c) >= 0.05) CHECK_REL(eval_bilateral(h11(a, c, z)).value, cf_bilateral_binomial(a, c, z), 1e-5);
    if (pole_distance(2 * c) >= 0.05) CHECK_REL(eval_bilateral(h22_dup(a, c, z)).value, cf_duplication(a, c, z), 1e-5);
  }
}

TEST_CASE("compensated sum recovers cancelled low-order bits") {
  CompensatedSum s;
  s.add(1.0);
  for (int i = 0; i < 1000; ++i) s.add(1e-16);
  s.add(-1.0);
  CHECK(s.value().real() == doctest::Approx(1e-13).epsilon(1e-12));
}
