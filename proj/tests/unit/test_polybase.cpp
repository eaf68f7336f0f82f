#include <doctest.h>

#include <cmath>

#include "mombound/errors.hpp"
#include "mombound/polynomial.hpp"

using namespace mombound;

TEST_CASE("graded-lex basis order") {
  MonomialBasis b(2, 2);
  REQUIRE(b.size() == 6);
  CHECK(b[0] == Exponent{0, 0});
  CHECK(b[1] == Exponent{1, 0});
  CHECK(b[2] == Exponent{0, 1});
  CHECK(b[3] == Exponent{2, 0});
  CHECK(b[4] == Exponent{1, 1});
  CHECK(b[5] == Exponent{0, 2});
  CHECK(b.index_of(Exponent{1, 1}) == 4u);
  CHECK_FALSE(b.index_of(Exponent{3, 0}).has_value());
}

TEST_CASE("basis sizes are binomials") {
  CHECK(basis_size(2, 14) == 120);
  CHECK(basis_size(11, 4) == 1365);
  CHECK(basis_size(3, 0) == 1);
  for (std::size_t n = 1; n <= 4; ++n)
    for (unsigned d = 0; d <= 5; ++d) CHECK(enumerate_basis(n, d).size() == basis_size(n, d));
}

TEST_CASE("rational parsing is exact") {
  CHECK(parse_rational("0.375") == Rational(3, 8));
  CHECK(parse_rational("-5/10") == Rational(-1, 2));
  CHECK(parse_rational("1e-3") == Rational(1, 1000));
  CHECK(parse_rational("2.5E2") == 250);
  CHECK(parse_rational("7") == 7);
  CHECK_THROWS_AS(parse_rational("1/0"), InputError);
  CHECK_THROWS_AS(parse_rational("abc"), InputError);
  CHECK(to_string(Rational(-3, 4)) == "-3/4");
}

TEST_CASE("rationalize recovers simple fractions") {
  CHECK(rationalize(1.0 / 3.0, 1000) == Rational(1, 3));
  CHECK(rationalize(-0.375, 100) == Rational(-3, 8));
  CHECK(rationalize(3.14159265358979, 1000) == Rational(355, 113));
  CHECK(rationalize(2.0, 10) == 2);
}

TEST_CASE("factorials") {
  CHECK(factorial(5) == 120);
  CHECK(odd_double_factorial(3) == 15);  // 5!!
  CHECK(odd_double_factorial(0) == 1);
  CHECK(power(Rational(2, 3), 3) == Rational(8, 27));
}

TEST_CASE("parse and print round trip") {
  Polynomial f = parse_polynomial("3/8 - 5*x1 + 21*x1^2 - 32*x1^3 + 16*x1^4");
  CHECK(f.dimension() == 1);
  CHECK(f.degree() == 4);
  CHECK(f.coefficient(Exponent{3}) == -32);
  CHECK(parse_polynomial(to_string(f)) == f);
  Polynomial g = parse_polynomial("x1^2*x2^2*(x1^2 + x2^2 - 1)", 2);
  CHECK(g.term_count() == 3);
  CHECK(g.coefficient(Exponent{4, 2}) == 1);
  CHECK(g.coefficient(Exponent{2, 2}) == -1);
  CHECK(parse_polynomial(to_string(g), 2) == g);
  CHECK(parse_polynomial("3x1^2 x2 - 2(x1 + 1)", 2) == parse_polynomial("3*x1^2*x2 - 2*x1 - 2", 2));
  CHECK(to_string(Polynomial(2)) == "0");
  CHECK_THROWS_AS(parse_polynomial("x1 +* 2"), InputError);
  CHECK_THROWS_AS(parse_polynomial("x3", 2), InputError);
}

TEST_CASE("arithmetic and evaluation") {
  Polynomial x = Polynomial::variable(2, 0), y = Polynomial::variable(2, 1);
  Polynomial f = (x + y) * (x - y);
  CHECK(f == x * x - y * y);
  std::vector<Rational> p{Rational(1, 2), Rational(3)};
  CHECK(poly_eval(f, p) == Rational(1, 4) - 9);
  std::vector<double> pd{0.5, 3.0};
  CHECK(poly_eval(f, pd) == doctest::Approx(-8.75));
  CHECK((f - f).is_zero());
  CHECK(poly_shift(f, 2) == f - Polynomial::constant(2, 2));
  CHECK(-f == f * Rational(-1));
}

TEST_CASE("from_coefficients follows the basis") {
  MonomialBasis b(2, 1);
  std::vector<Rational> c{Rational(1), Rational(2), Rational(0)};
  Polynomial g = from_coefficients(b, c);
  CHECK(g == Polynomial::constant(2, 1) + Polynomial::variable(2, 0) * Rational(2));
}
