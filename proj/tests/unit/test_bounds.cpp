#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "helpers.hpp"
#include "saddle/bounds/bilinear.hpp"
#include "saddle/bounds/eta_spectrum.hpp"
#include "saddle/bounds/interval_bounds.hpp"
#include "saddle/bounds/report.hpp"
#include "saddle/bounds/spectral_summary.hpp"
#include "saddle/errors.hpp"
#include "saddle/linalg/spectrum.hpp"
#include "saddle/verify/property_suite.hpp"
#include "saddle/verify/random_instances.hpp"

using namespace saddle;
using namespace saddle::bounds;
using doctest::Approx;

namespace {

const double golden = (1.0 + std::sqrt(5.0)) / 2.0;

std::vector<double> oracle(const SaddleSystem& s) {
  return linalg::dense_full_spectrum(model::assemble_w(s));
}

}  // namespace

TEST_CASE("quasi-PF verdicts") {
  const auto s = analyze(test::system(test::sym({{2}}), test::rect({{1}})));
  CHECK(s.lambda_max == Approx(1.0 + std::sqrt(2.0)).epsilon(1e-12));
  CHECK(s.lambda_min == Approx(1.0 - std::sqrt(2.0)).epsilon(1e-12));
  CHECK(s.s == Approx(2.0).epsilon(1e-12));
  CHECK(s.rho == Approx(s.lambda_max));
  CHECK(s.quasi_pf_strict);
  CHECK(s.c_absent);

  const auto f = analyze(test::system(test::sym({{0.01}}), test::rect({{1}}), test::sym({{-2}})));
  CHECK(f.s == Approx(-1.99).epsilon(1e-12));
  CHECK_FALSE(f.quasi_pf);
  CHECK(f.condition_value == Approx(-1.99));
  CHECK_FALSE(f.condition_holds);
}

TEST_CASE("tie tolerance marks the boundary") {
  const auto s = summarize(1.0, -1.0 + 1e-12, 1.0, 0.0, true);
  CHECK(s.boundary);
  CHECK(s.quasi_pf);
  CHECK_FALSE(s.quasi_pf_strict);
  const auto t = summarize(1.0, -1.0 - 1e-6, 1.0, 0.0, true);
  CHECK_FALSE(t.quasi_pf);
  CHECK(t.rho == Approx(1.0 + 1e-6));
}

TEST_CASE("sum lower bound") {
  auto c = sum_lower_bound_check(test::system(test::sym({{1}}), test::rect({{0}})));
  CHECK(c.lhs == Approx(1.0));
  CHECK(c.rhs == Approx(1.0));
  CHECK(c.holds);
  c = sum_lower_bound_check(test::system(test::sym({{2}}), test::rect({{1}})));
  CHECK(c.lhs == Approx(2.0));
  CHECK(c.rhs == Approx(2.0));
  CHECK(c.holds);
  verify::InstanceGenerator gen(17);
  const auto r = test::system(gen.spd(10), gen.gaussian(10, 4), gen.nsd(4));
  CHECK(sum_lower_bound_check(r).holds);
}

TEST_CASE("bilinear extremum") {
  const auto e = bilinear_extremum(test::rect({{3}}));
  CHECK(e.max_value == Approx(1.5).epsilon(1e-14));
  CHECK(std::abs(e.x_star[0]) == Approx(std::sqrt(0.5)));
  CHECK(std::abs(e.y_star[0]) == Approx(std::sqrt(0.5)));
  CHECK(bilinear_value(test::rect({{3}}), e.x_star, e.y_star) == Approx(1.5).epsilon(1e-14));
  CHECK(bilinear_value(test::rect({{3}}), e.x_min(), e.y_star) == Approx(-1.5).epsilon(1e-14));

  const auto r = test::rect({{3, 0}, {0, 4}, {0, 0}});
  const auto f = bilinear_extremum(r);
  CHECK(f.max_value == Approx(2.0).epsilon(1e-14));
  CHECK(bilinear_value(r, f.x_star, f.y_star) == Approx(2.0).epsilon(1e-12));

  const auto z = bilinear_extremum(linalg::RectMatrix::zero(3, 2));
  CHECK(z.max_value == 0.0);
  double norm = 0.0;
  for (double v : z.x_star) norm += v * v;
  for (double v : z.y_star) norm += v * v;
  CHECK(norm == Approx(1.0));
}

TEST_CASE("explicit eta spectrum") {
  const auto z = explicit_spectrum_eta(2.0, linalg::RectMatrix::zero(2, 1));
  CHECK(z.rank_defect == 1);
  CHECK(z.zero_mult == 1);
  CHECK(z.eta_mult == 2);
  CHECK(z.printed_eta_mult() == 0);
  CHECK(z.eigenvalues() == std::vector<double>{0, 2, 2});

  const auto e = explicit_spectrum_eta(1.0, test::rect({{1}, {0}}));
  const auto v = e.eigenvalues();
  REQUIRE(v.size() == 3);
  CHECK(v[0] == Approx(1.0 - golden).epsilon(1e-14));
  CHECK(v[1] == Approx(1.0));
  CHECK(v[2] == Approx(golden).epsilon(1e-14));
  CHECK_THROWS_AS(explicit_spectrum_eta(0.0, test::rect({{1}})), InvalidArgument);
}

TEST_CASE("Rusten-Winther intervals") {
  const auto s = test::system(test::diag({1, 1}), test::rect({{1}, {0}}));
  const auto b = rusten_winther_bounds(s);
  CHECK(b.theorem == BoundTheorem::rusten_winther);
  CHECK(b.neg.lo == Approx(1.0 - golden));
  CHECK(b.neg.hi == Approx(1.0 - golden));
  CHECK(b.pos.lo == Approx(1.0));
  CHECK(b.pos.hi == Approx(golden));
  for (double l : oracle(s)) CHECK(b.contains(l, 1e-12));

  const auto s2 = test::system(test::diag({1, 4}), test::rect({{0}, {1}}));
  const auto b2 = rusten_winther_bounds(s2);
  CHECK(b2.neg.lo == Approx(0.5 * (1.0 - std::sqrt(5.0))));
  CHECK(b2.neg.hi == Approx(0.5 * (4.0 - std::sqrt(20.0))));
  CHECK(b2.pos.lo == Approx(1.0));
  CHECK(b2.pos.hi == Approx(0.5 * (4.0 + std::sqrt(20.0))));
  for (double l : oracle(s2)) CHECK(b2.contains(l, 1e-12));

  const double eta = 3.0, sigma = 2.0;
  const auto s3 = test::system(test::sym({{eta}}), test::rect({{sigma}}));
  const auto b3 = rusten_winther_bounds(s3);
  const double root = std::sqrt(eta * eta + 4 * sigma * sigma);
  CHECK(b3.neg.lo == Approx(0.5 * (eta - root)));
  CHECK(b3.neg.hi == Approx(0.5 * (eta - root)));
  CHECK(b3.pos.lo == Approx(eta));
  CHECK(b3.pos.hi == Approx(0.5 * (eta + root)));

  CHECK_THROWS_AS(rusten_winther_bounds(test::system(test::diag({1, 1}), test::rect({{1, 1}, {1, 1}}))),
                  HypothesisError);
  CHECK_THROWS_AS(rusten_winther_bounds(test::system(test::sym({{1}}), test::rect({{1}}), test::sym({{-1}}))),
                  HypothesisError);
}

TEST_CASE("Silvester-Wathen counterexample separates the variants") {
  const auto s = verify::silvester_wathen_counterexample();
  auto spec = oracle(s);
  std::sort(spec.begin(), spec.end());
  CHECK(spec[0] == Approx(-1.0));
  CHECK(spec[1] == Approx(1.0 - golden));

  const auto c = silvester_wathen_bounds(s, BoundVariant::corrected);
  CHECK(c.neg.lo == Approx(-std::sqrt(2.0)));
  CHECK(c.neg.hi == Approx(1.0 - golden));
  for (double l : spec) CHECK(c.contains(l, 1e-12));

  const auto p = silvester_wathen_bounds(s, BoundVariant::as_printed);
  CHECK(p.variant == BoundVariant::as_printed);
  CHECK_FALSE(p.contains(-1.0, 1e-9));
  CHECK(audit_containment(p, spec, 1e-9).outside == 1);
}

TEST_CASE("Silvester-Wathen with C = 0 matches Rusten-Winther") {
  verify::InstanceGenerator gen(23);
  for (int k = 0; k < 10; ++k) {
    const std::size_t n = gen.uniform_int(1, 6);
    const auto s = test::system(gen.spd(n), gen.gaussian(n, n));
    const auto rw = rusten_winther_bounds(s);
    const auto sw = silvester_wathen_bounds(s, BoundVariant::corrected);
    CHECK(sw.neg.lo == Approx(rw.neg.lo).epsilon(1e-10));
    CHECK(sw.neg.hi == Approx(rw.neg.hi).epsilon(1e-9));
    CHECK(sw.pos.lo == Approx(rw.pos.lo).epsilon(1e-10));
    CHECK(sw.pos.hi == Approx(rw.pos.hi).epsilon(1e-10));
  }
}

TEST_CASE("Silvester-Wathen with rank-deficient B and definite C") {
  const auto s = test::system(test::sym({{1}}), test::rect({{0}}), test::sym({{-1}}));
  const auto b = silvester_wathen_bounds(s, BoundVariant::corrected);
  CHECK(b.neg.lo == Approx(-1.0));
  CHECK(b.contains(-1.0, 1e-12));
  CHECK(b.contains(1.0, 1e-12));
  CHECK_THROWS_AS(silvester_wathen_bounds(test::system(test::sym({{1}}), test::rect({{0}})),
                                          BoundVariant::corrected),
                  HypothesisError);
}

TEST_CASE("report records inapplicable theorems as notes") {
  const auto s = test::system(test::diag({1, 2}), test::rect({{1, 1}, {1, 1}}));
  const auto r = build_report(s, std::nullopt, BoundVariant::corrected);
  CHECK_FALSE(r.rusten_winther.bounds);
  CHECK(r.rusten_winther.note.find("not applicable") != std::string::npos);
  CHECK(r.rusten_winther.note.find("hypothesis B full-column rank") != std::string::npos);
  CHECK(r.summary.quasi_pf);
}

TEST_CASE("variant names") {
  CHECK(parse_variant("corrected") == BoundVariant::corrected);
  CHECK(parse_variant("as_printed") == BoundVariant::as_printed);
  CHECK_THROWS_AS(parse_variant("other"), InvalidArgument);
}

TEST_CASE("the simple upper end of the negative interval fails for small l1(A) + mu") {
  const double a = 0.1, b = 0.1, c = -0.5;
  const auto s = test::system(test::sym({{a}}), test::rect({{b}}), test::sym({{c}}));
  const double neg = 0.5 * (a + c - std::sqrt((a - c) * (a - c) + 4 * b * b));
  const double mu = b * b - c;
  REQUIRE(a + mu < 1.0);
  const double simple_hi = 0.5 * (a - std::sqrt(a * a + 4 * mu));
  CHECK(neg > simple_hi + 0.1);  // the eigenvalue escapes the simple form
  const auto q = silvester_wathen_bounds(s, BoundVariant::corrected);
  CHECK(q.contains(neg, 1e-12));
  CHECK(q.neg.hi == Approx(neg).epsilon(1e-12));  // attained
}
