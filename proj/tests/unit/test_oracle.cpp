#include <doctest.h>

#include <cmath>

#include "mombound/errors.hpp"
#include "mombound/oracle.hpp"

using namespace mombound;
using namespace mombound::oracle;

TEST_CASE("grid_minimize finds the minimum of a shifted quadratic") {
  Polynomial f = parse_polynomial("(x1 - 1/4)^2", 1);
  GridMinimum g = grid_minimize(f, {0.0}, {1.0}, 401);
  CHECK(g.value == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(g.point[0] == doctest::Approx(0.25));
}

TEST_CASE("grid_minimize in two dimensions") {
  Polynomial f = parse_polynomial("x1^2*x2^2*(x1^2 + x2^2 - 1)", 2);
  GridMinimum g = grid_minimize(f, {0.0, 0.0}, {1.0, 1.0}, 301);
  CHECK(g.value == doctest::Approx(-1.0 / 27).epsilon(1e-3));
  CHECK(g.value >= -1.0 / 27 - 1e-15);
}

TEST_CASE("gradient_bound dominates the gradient on the box") {
  Polynomial f = parse_polynomial("3*x1^2 - x1*x2", 2);
  // |6x1 - x2| <= 7, |x1| <= 1
  CHECK(gradient_bound(f, {-1, -1}, {1, 1}) >= std::sqrt(49.0 + 1.0) - 1e-12);
}

TEST_CASE("box_moment_binomial against hand integrals") {
  // (1/2) int_{-1}^{1} x^2 dx = 1/3
  CHECK(box_moment_binomial({Rational(-1)}, {Rational(1)}, Exponent{2}) == Rational(1, 3));
  CHECK(box_moment_binomial({Rational(-1)}, {Rational(1)}, Exponent{3}) == 0);
  // (1/2) int_1^3 x dx = 2
  CHECK(box_moment_binomial({Rational(1)}, {Rational(3)}, Exponent{1}) == 2);
  CHECK(box_moment_binomial({Rational(0), Rational(0)}, {Rational(1), Rational(2)}, Exponent{1, 2}) ==
        Rational(1, 2) * Rational(4, 3));
}

TEST_CASE("simplex_moment_iterated against hand integrals") {
  // uniform on the triangle: E[x1] = 1/3, E[x1 x2] = 1/12, E[x1^2] = 1/6
  CHECK(simplex_moment_iterated(Exponent{0, 0}) == 1);
  CHECK(simplex_moment_iterated(Exponent{1, 0}) == Rational(1, 3));
  CHECK(simplex_moment_iterated(Exponent{1, 1}) == Rational(1, 12));
  CHECK(simplex_moment_iterated(Exponent{2, 0}) == Rational(1, 6));
  // interval [0,1]
  CHECK(simplex_moment_iterated(Exponent{3}) == Rational(1, 4));
}

TEST_CASE("discrete_moment_direct") {
  MeasureSpec m = MeasureSpec::discrete({{Rational(1), Rational(2)}, {Rational(-1), Rational(3)}},
                                        {Rational(1, 4), Rational(3, 4)});
  CHECK(discrete_moment_direct(m, Exponent{1, 1}) == Rational(1, 4) * 2 + Rational(3, 4) * -3);
}

TEST_CASE("Monte Carlo estimates a sphere second moment") {
  // E[x1^2] = 1/n on the unit circle
  auto e = mc_moment(MeasureSpec::sphere(2), Exponent{2, 0}, 200000, 7);
  CHECK(std::abs(e.estimate - 0.5) < 5 * e.standard_error);
  CHECK(e.standard_error < 0.01);
}

TEST_CASE("Monte Carlo rejects tiny sample sizes and unsupported measures") {
  CHECK_THROWS_AS(mc_moment(MeasureSpec::ball(2), Exponent{2, 0}, 10, 7), InputError);
  CHECK_THROWS_AS(mc_moment(MeasureSpec::gaussian(1), Exponent{2}, 100000, 7), CapabilityError);
}
