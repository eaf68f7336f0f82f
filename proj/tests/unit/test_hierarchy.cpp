#include <doctest.h>

#include <cmath>
#include <sstream>

#include "mombound/hierarchy.hpp"
#include "mombound/problems.hpp"

using namespace mombound;

TEST_CASE("level 0 is the mean of f, exactly") {
  MomentSequence e(MeasureSpec::exponential(2));
  BoundReport r = upper_bound(motzkin_like(), e, 0);
  CHECK(r.lambda_exact == 92);
  CHECK(r.status == BoundStatus::ok);
  MomentSequence b(MeasureSpec::unit_box(2));
  CHECK(upper_bound(motzkin_like(), b, 0).lambda_exact == Rational(1, 45));
}

TEST_CASE("bounds are monotone and stay above the minimum") {
  MomentSequence seq(MeasureSpec::unit_box(2));
  auto reports = run_hierarchy(motzkin_like(), seq, 8);
  REQUIRE(reports.size() == 9);
  for (std::size_t d = 0; d < reports.size(); ++d) {
    CAPTURE(d);
    CHECK(reports[d].status == BoundStatus::ok);
    CHECK(reports[d].lambda >= -1.0 / 27);
    CHECK(reports[d].lambda <= reports[0].lambda + 1e-12);
    if (d > 0) CHECK(reports[d].lambda <= reports[d - 1].lambda + 1e-10);
  }
}

TEST_CASE("parallel levels match sequential levels") {
  MomentSequence seq(MeasureSpec::exponential(2));
  HierarchyOptions par;
  par.jobs = 4;
  auto a = run_hierarchy(unattained_infimum(), seq, 6);
  auto b = run_hierarchy(unattained_infimum(), seq, 6, par);
  for (std::size_t d = 0; d < a.size(); ++d) CHECK(a[d].lambda_exact == b[d].lambda_exact);
}

TEST_CASE("dual density complementarity and normalization") {
  MomentSequence seq(MeasureSpec::unit_box(1));
  BoundReport r = upper_bound(double_well(), seq, 6);
  SosDensity s = dual_density(r, seq);
  // integral of sigma is 1; integral of f sigma is lambda
  Polynomial sq = s.g * s.g;
  CHECK(integrate(sq, seq) == s.normalization);
  CHECK(s.expected_objective == r.lambda_exact);
  CHECK(s.complementarity_residual <= 1e-8 * std::max(1.0, std::abs(r.lambda)));
  std::vector<double> x{0.3};
  CHECK(s(x) >= 0);
}

TEST_CASE("finite convergence on a discrete measure") {
  // f = x on three points: minimum -1 once g can interpolate the minimizer.
  MeasureSpec m = MeasureSpec::discrete({{Rational(-1)}, {Rational(0)}, {Rational(2)}});
  MomentSequence seq(m);
  Polynomial f = Polynomial::variable(1, 0);
  auto reports = run_hierarchy(f, seq, 4);
  CHECK(reports[0].lambda == doctest::Approx(1.0 / 3));
  for (unsigned d = 2; d <= 4; ++d) CHECK(std::abs(reports[d].lambda + 1.0) <= 1e-9);
}

TEST_CASE("candidate point for a convex objective") {
  MomentSequence seq(MeasureSpec::unit_box(2));
  Polynomial f = parse_polynomial("(x1 - 1/3)^2 + (x2 - 3/4)^2", 2);
  BoundReport r = upper_bound(f, seq, 4);
  CandidatePoint c = extract_candidate(dual_density(r, seq), f, seq);
  CHECK(c.in_support);
  CHECK(c.f_value <= r.lambda + 1e-12);
}

TEST_CASE("CSV output") {
  MomentSequence seq(MeasureSpec::exponential(2));
  std::ostringstream out;
  write_bounds_csv(run_hierarchy(motzkin_like(), seq, 1), out);
  CHECK(out.str().rfind("d,lambda,residual,status\n0,92,0,ok\n1,15.6015783552,", 0) == 0);
  CHECK(format_number(0.0) == "0");
  CHECK(format_number(std::nan("")) == "nan");
}

TEST_CASE("last_trusted skips ill-conditioned levels") {
  std::vector<BoundReport> r(3);
  r[2].status = BoundStatus::ill_conditioned;
  CHECK(last_trusted(r) == 1);
}
