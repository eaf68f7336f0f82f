#include <doctest.h>

#include "mombound/cone.hpp"
#include "mombound/errors.hpp"

using namespace mombound;

TEST_CASE("a sum of squares is certified up to k") {
  MomentSequence seq(MeasureSpec::gaussian(2));
  Polynomial f = parse_polynomial("(x1 - x2)^2 + (x1*x2 - 1)^2", 2);
  Certificate c = certify_nonnegativity(f, seq, 3);
  CHECK(c.verdict == CertificateVerdict::member_up_to);
  CHECK(c.k_reached == 3);
  CHECK_FALSE(c.witness.has_value());
  CHECK(cone_membership(f, seq, 2));
}

TEST_CASE("a negative polynomial gets an exact witness") {
  MomentSequence seq(MeasureSpec::gaussian(2));
  Polynomial f = parse_polynomial("x1^2 + x2^2 - 1", 2);  // mean 1 but negative near 0
  Certificate c = certify_nonnegativity(f, seq, 4);
  REQUIRE(c.verdict == CertificateVerdict::counterexample);
  REQUIRE(c.witness.has_value());
  const Polynomial& h = *c.witness;
  CHECK(integrate(h * h * f, seq) == *c.witness_value);
  CHECK(*c.witness_value < 0);
  CHECK_FALSE(cone_membership(f, seq, c.k_reached));
}

TEST_CASE("copositivity") {
  SUBCASE("positive semidefinite is copositive") {
    RationalMatrix a = RationalMatrix::from_rows({{Rational(2), Rational(-1)}, {Rational(-1), Rational(2)}});
    CHECK(copositivity_test(a, 4).conclusion == CopositivityConclusion::no_refutation);
  }
  SUBCASE("nonnegative entries are copositive") {
    RationalMatrix a = RationalMatrix::from_rows({{Rational(0), Rational(1)}, {Rational(1), Rational(0)}});
    CHECK(copositivity_test(a, 4).conclusion == CopositivityConclusion::no_refutation);
  }
  SUBCASE("a matrix with a negative diagonal is refuted") {
    RationalMatrix a = RationalMatrix::from_rows({{Rational(-1), Rational(0)}, {Rational(0), Rational(3)}});
    CopositivityReport r = copositivity_test(a, 4);
    CHECK(r.conclusion == CopositivityConclusion::not_copositive);
    CHECK(r.levels.back().lambda_exact < 0);
  }
  SUBCASE("a strongly negative off-diagonal is refuted") {
    RationalMatrix a = RationalMatrix::from_rows({{Rational(1), Rational(-2)}, {Rational(-2), Rational(1)}});
    CHECK(copositivity_test(a, 6).conclusion == CopositivityConclusion::not_copositive);
  }
  CHECK(quadratic_form_polynomial(RationalMatrix::from_rows({{Rational(1), Rational(3)}, {Rational(3), Rational(0)}})) ==
        parse_polynomial("x1^2 + 6*x1*x2", 2));
}
