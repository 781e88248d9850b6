#include <cmath>
#include <string>

#include "bilateral/binomial.hpp"
#include "bilateral/closed_forms.hpp"
#include "bilateral/derivation.hpp"
#include "bilateral/errors.hpp"
#include "support.hpp"

using namespace bilateral;
using testing::Gen;

namespace {

Complex unit(double theta) { return {std::cos(theta), std::sin(theta)}; }

const SubCheck& find(const VerificationReport& r, const std::string& name) {
  for (const SubCheck& sc : r.subchecks) {
    if (sc.name == name) return sc;
  }
  FAIL("missing subcheck " << name);
  throw std::logic_error("unreachable");
}

void check_all_passed(const VerificationReport& r) {
  for (const SubCheck& sc : r.subchecks) {
    INFO(r.identity_id << "/" << sc.name << ": residual " << sc.residual << ", tolerance " << sc.tolerance
                       << ", notes " << sc.notes);
    CHECK((sc.status == CheckStatus::passed || sc.status == CheckStatus::not_applicable));
  }
  CHECK(r.passed);
}

}  // namespace

TEST_CASE("cancellation weights") {
  const Complex z = unit(0.9);
  CHECK(sum_path_weight(z, 0) == Complex(2.0, 0.0));
  CHECK(sum_path_weight(z, 1) == Complex(0.0, 0.0));
  CHECK_REL(sum_path_weight(z, -2), 2.0 * unit(-1.8), 1e-15);
  CHECK(diff_path_weight(z, 0) == Complex(0.0, 0.0));
  CHECK_REL(diff_path_weight(z, 1), 2.0 * z, 1e-15);
  CHECK(diff_path_weight(z, 2) == Complex(0.0, 0.0));
}

TEST_CASE("substitution maps land on the duplicated parameters") {
  const Complex a = -1.25, c = 1.5, z = unit(0.7);
  const DerivationPoint sp = sum_path_point(a, c, z);
  const DerivationPoint dp = diff_path_point(a, c, z);
  const BilateralParams from_sum = sum_path_parameters(sp.n, sp.k, z);
  const BilateralParams from_diff = diff_path_parameters(dp.n, dp.k, z);
  for (const BilateralParams* p : {&from_sum, &from_diff}) {
    CHECK(p->a_list[0] == a);
    CHECK(p->a_list[1] == a + 0.5);
    CHECK(p->c_list[0] == c);
    CHECK(p->c_list[1] == c + 0.5);
    CHECK_REL(p->z, z * z, 1e-15);
  }
  // m = 0: prefactor times the unit leading term.
  CHECK(sum_path_prefactor(sp.n, sp.k) == 2.0 * binom(sp.n, sp.k));
  CHECK(diff_path_prefactor(dp.n, dp.k, z) == 2.0 * binom(dp.n, dp.k - 1.0) / z);
}

TEST_CASE("left-hand sides with principal branches") {
  // mpmath values of (1+z)^n/z^k +- (1-z)^n/(-z)^k.
  CHECK_REL(sum_path_lhs(-3.5, -0.5, unit(kPi / 4)), Complex(-2.435733039062384, 0.40042523379675987), 1e-13);
  CHECK_REL(diff_path_lhs(-3.5, -0.5, unit(kPi / 4)), Complex(2.565304772437, -0.5943430366437664), 1e-13);
  CHECK_REL(sum_path_lhs(4.5, 2.0, unit(0.7)), Complex(16.966048665166657, 2.8682073312399936), 1e-13);
  CHECK_REL(diff_path_lhs(4.5, 3.0, unit(0.7)), Complex(14.824099664090761, -8.736102663824777), 1e-13);
}

TEST_CASE("sum path at a point outside the convergence region") {
  const DerivationPoint pt{-3.5, -0.5, unit(kPi / 4), 20};
  check_all_passed(check_sum_cancellation(pt));
  const VerificationReport r = check_sum_path(pt);
  check_all_passed(r);
  // s = n + 1 < 1 here, so direct summation is not attempted.
  CHECK(find(r, "end_to_end").status == CheckStatus::not_applicable);
}

TEST_CASE("both paths inside the convergence region") {
  const Complex a = -1.25, c = 1.5, z = unit(0.7);
  const VerificationReport sum = check_sum_path(sum_path_point(a, c, z, 40));
  const VerificationReport diff = check_diff_path(diff_path_point(a, c, z, 40));
  check_all_passed(sum);
  check_all_passed(diff);
  for (const VerificationReport* r : {&sum, &diff}) {
    CHECK(find(*r, "end_to_end").status == CheckStatus::passed);
    CHECK(find(*r, "closed_form").status == CheckStatus::passed);
    CHECK(find(*r, "ratios").evaluated > 0);
  }
  const VerificationReport agree = check_paths_agree(a, c, z);
  check_all_passed(agree);
  CHECK(find(agree, "series_values").status == CheckStatus::passed);
}

TEST_CASE("derivation preconditions") {
  CHECK_THROWS_AS(validate(DerivationPoint{4.5, 2.0, unit(0.3), 0}), PreconditionError);
  CHECK_THROWS_AS(validate(DerivationPoint{4.5, 2.0, Complex(0.5, 0.5), 10}), PreconditionError);
  CHECK_THROWS_AS(check_sum_cancellation(DerivationPoint{4.5, 2.0, 2.0, 10}), PreconditionError);
  // n = -1 with non-integer k + j leaves the numerator pole uncancelled.
  CHECK_THROWS_AS(validate(DerivationPoint{-1.0, 0.5, unit(0.3), 3}), PreconditionError);
}

TEST_CASE("property: cancellation patterns for |j| <= 40") {
  Gen gen(0xd807aa98a3030242ull);
  for (int trial = 0; trial < 100; ++trial) {
    const DerivationPoint pt{gen.box(-5.0, 5.0, -1.0, 1.0), gen.box(-5.0, 5.0, -1.0, 1.0), gen.unit(), 40};
    INFO("k = " << pt.k << ", z = " << pt.z);
    const VerificationReport s = check_sum_cancellation(pt);
    const VerificationReport d = check_diff_cancellation(pt);
    CHECK(find(s, "cancellation").residual <= 1e-14);
    CHECK(find(d, "cancellation").residual <= 1e-14);
    CHECK(s.passed);
    CHECK(d.passed);
  }
}

TEST_CASE("property: ratio and coefficient sub-checks on random paths") {
  Gen gen(0x12835b0145706fbeull);
  int tested = 0;
  while (tested < 100) {
    const double a = gen.non_integer(-2.0, 0.0);
    const double c = a + gen.uniform(1.5, 3.0);
    if (pole_distance(2.0 * c) < 0.05) continue;
    ++tested;
    const Complex z = unit(gen.uniform(0.1, 3.0));
    INFO("a = " << a << ", c = " << c << ", z = " << z);
    const VerificationReport sum = check_sum_path(sum_path_point(a, c, z));
    const VerificationReport diff = check_diff_path(diff_path_point(a, c, z));
    for (const VerificationReport* r : {&sum, &diff}) {
      CHECK(find(*r, "ratios").residual <= 1e-12);
      CHECK(find(*r, "coefficients").residual <= 1e-10);
      CHECK(find(*r, "closed_form").residual <= 1e-10);
    }
  }
}

TEST_CASE("property: the two paths agree") {
  Gen gen(0x243185be4ee4b28cull);
  int tested = 0;
  while (tested < 30) {
    const Complex a = gen.box(-2.0, 0.0, -0.3, 0.3);
    const Complex c = a + gen.box(1.5, 3.0, -0.3, 0.3);
    if (pole_distance(2.0 * c) < 0.05 || pole_distance(1.0 - 2.0 * a) < 0.05) continue;
    ++tested;
    const Complex z = unit(gen.uniform(0.1, 3.0));
    INFO("a = " << a << ", c = " << c << ", z = " << z);
    check_all_passed(check_paths_agree(a, c, z));
  }
}
