#include <doctest.h>

#include "mombound/errors.hpp"
#include "mombound/problems.hpp"

using namespace mombound;

TEST_CASE("SplitMix64 reference stream") {
  SplitMix64 r(0);
  CHECK(r.next() == 0xe220a8397b1dcdafULL);
  CHECK(r.next() == 0x6e789e6aa1b965f4ULL);
  SplitMix64 u(42);
  for (int i = 0; i < 1000; ++i) {
    const double x = u.uniform();
    CHECK((x >= 0.0 && x < 1.0));
    CHECK(u.below(7) < 7);
  }
}

TEST_CASE("example polynomials") {
  CHECK(double_well().coefficient(Exponent{0}) == Rational(3, 8));
  CHECK(double_well().degree() == 4);
  CHECK(unattained_infimum() == parse_polynomial("x1^2 + (1 - x1*x2)^2", 2));
  CHECK(motzkin_like().term_count() == 3);
}

TEST_CASE("brute force on the hypercube") {
  Polynomial f = parse_polynomial("-2*x1*x2", 2);
  HypercubeMinimum m = brute_force_hypercube(f, 2);
  CHECK(m.value == -2);
  CHECK(m.argmin[0] * m.argmin[1] == 1);
  CHECK(brute_force_hypercube(maxcut_equal(11).objective(), 11).value == -5);
}

TEST_CASE("maxcut objective is sum over i>j of 2 q_ij x_i x_j") {
  MaxCutInstance inst = maxcut_equal(3);
  CHECK(inst.objective() == parse_polynomial("x1*x2 + x1*x3 + x2*x3", 3));
  MaxCutInstance r1 = maxcut_random(6, 0.5, 9), r2 = maxcut_random(6, 0.5, 9);
  CHECK(r1.q == r2.q);
  for (std::size_t i = 0; i < 6; ++i) CHECK(r1.q(i, i) == 0);
  RationalMatrix bad = RationalMatrix::identity(3);
  CHECK_THROWS_AS(maxcut_from_matrix(bad), InputError);
}
