#include <doctest.h>

#include <cmath>

#include "mombound/errors.hpp"
#include "mombound/measures.hpp"
#include "mombound/oracle.hpp"

using namespace mombound;

TEST_CASE("closed-form moments") {
  MomentSequence g(MeasureSpec::gaussian(2));
  CHECK(g.moment(Exponent{4, 2}) == 3);
  CHECK(g.moment(Exponent{3, 2}) == 0);
  MomentSequence e(MeasureSpec::exponential(2));
  CHECK(e.moment(Exponent{4, 2}) == 48);
  MomentSequence b(MeasureSpec::unit_box(2));
  CHECK(b.moment(Exponent{2, 4}) == Rational(1, 15));
  MomentSequence c(MeasureSpec::pm1_cube(3));
  CHECK(c.moment(Exponent{2, 0, 4}) == 1);
  CHECK(c.moment(Exponent{1, 0, 0}) == 0);
  MomentSequence s(MeasureSpec::sphere(3));
  CHECK(s.moment(Exponent{2, 0, 0}) == Rational(1, 3));
  CHECK(s.moment(Exponent{2, 2, 0}) == Rational(1, 15));
  MomentSequence ball(MeasureSpec::ball(2));
  CHECK(ball.moment(Exponent{2, 0}) == Rational(1, 4));
  for (auto* seq : {&g, &e, &b, &c, &s, &ball}) CHECK(seq->moment(Exponent(seq->dimension())) == 1);
}

TEST_CASE("box moments agree with the binomial oracle") {
  std::vector<Rational> lo{Rational(-1), Rational(1, 2)}, hi{Rational(2), Rational(3)};
  MomentSequence seq(MeasureSpec::box(lo, hi));
  const MonomialBasis basis(2, 6);
  for (const Exponent& a : basis.monomials())
    CHECK(seq.moment(a) == oracle::box_moment_binomial(lo, hi, a));
}

TEST_CASE("simplex moments agree with iterated integration") {
  for (std::size_t n = 1; n <= 3; ++n) {
    MomentSequence seq(MeasureSpec::simplex(n));
    const MonomialBasis basis(n, 5);
    for (const Exponent& a : basis.monomials())
      CHECK(seq.moment(a) == oracle::simplex_moment_iterated(a));
  }
}

TEST_CASE("discrete moments agree with direct summation") {
  MeasureSpec m = MeasureSpec::discrete(
      {{Rational(1), Rational(-2)}, {Rational(1, 3), Rational(0)}, {Rational(-1), Rational(5, 2)}},
      {Rational(1, 2), Rational(1, 3), Rational(1, 6)});
  MomentSequence seq(m);
  const MonomialBasis basis(2, 6);
  for (const Exponent& a : basis.monomials())
    CHECK(seq.moment(a) == oracle::discrete_moment_direct(m, a));
}

TEST_CASE("closed forms agree with Monte Carlo for |alpha| <= 6") {
  for (const MeasureSpec& m : {MeasureSpec::sphere(2), MeasureSpec::sphere(3), MeasureSpec::ball(2),
                               MeasureSpec::ball(3), MeasureSpec::simplex(2)}) {
    CAPTURE(std::string(kind_name(m.kind())));
    CAPTURE(m.dimension());
    MomentSequence seq(m);
    const MonomialBasis basis(m.dimension(), 6);
    auto est = oracle::mc_moments(m, 6, 1000000, 99 + m.dimension());
    REQUIRE(est.size() == basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i) {
      const double exact = seq.moment(basis[i]).get_d();
      CHECK(std::abs(est[i].estimate - exact) <= 5 * est[i].standard_error + 1e-12);
    }
  }
}

TEST_CASE("support metadata") {
  CHECK(MeasureSpec::unit_box(2).support().convex);
  CHECK(MeasureSpec::unit_box(2).support().compact);
  CHECK_FALSE(MeasureSpec::gaussian(2).support().compact);
  CHECK(MeasureSpec::pm1_cube(2).support().discrete);
  CHECK_FALSE(MeasureSpec::sphere(2).support().convex);
  std::vector<double> inside{0.5, 0.25}, outside{0.9, 0.9};
  CHECK(MeasureSpec::simplex(2).contains(inside));
  CHECK_FALSE(MeasureSpec::simplex(2).contains(outside));
}

TEST_CASE("invalid measures") {
  CHECK_THROWS_AS(kind_from_name("cauchy"), CapabilityError);
  CHECK_THROWS_AS(MeasureSpec::discrete({{Rational(1)}}, {Rational(1, 2)}), InputError);
  CHECK_THROWS_AS(MeasureSpec::box({Rational(1)}, {Rational(0)}), InputError);
  CHECK(kind_from_name("uniform_sphere") == MeasureKind::uniform_sphere);
}

TEST_CASE("integrate is linear in the polynomial") {
  MomentSequence seq(MeasureSpec::gaussian(2));
  Polynomial f = parse_polynomial("x1^4 + 2*x1*x2 - 3", 2);
  CHECK(integrate(f, seq) == 0);
  CHECK(integrate(f * Rational(2), seq) == 2 * integrate(f, seq));
}
