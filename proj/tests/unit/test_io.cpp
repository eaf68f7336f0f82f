#include <doctest.h>

#include "mombound/errors.hpp"
#include "mombound/io.hpp"
#include "mombound/problems.hpp"

using namespace mombound;

TEST_CASE("problem round trip") {
  for (const MeasureSpec& m :
       {MeasureSpec::gaussian(2), MeasureSpec::exponential(2), MeasureSpec::box({Rational(-1, 2), Rational(0)}, {Rational(1), Rational(3)}),
        MeasureSpec::pm1_cube(2), MeasureSpec::simplex(2), MeasureSpec::ball(2), MeasureSpec::sphere(2),
        MeasureSpec::discrete({{Rational(1), Rational(2)}, {Rational(0), Rational(-1, 3)}})}) {
    Problem p{motzkin_like(), m};
    Problem back = problem_from_json(parse_json(problem_to_json(p).dump()));
    CHECK(back.objective == p.objective);
    CHECK(back.measure.kind() == m.kind());
    MomentSequence s1(m), s2(back.measure);
    const MonomialBasis basis(2, 4);
    for (const Exponent& a : basis.monomials()) CHECK(s1.moment(a) == s2.moment(a));
  }
}

TEST_CASE("objective as text") {
  Problem p = problem_from_json(parse_json(
      R"({"v":1,"variables":1,"measure":{"kind":"lebesgue_box","n":1},"objective":"0.375 - 5*x1 + 21*x1^2 - 32*x1^3 + 16*x1^4"})"));
  CHECK(p.objective == double_well());
  CHECK(p.measure.kind() == MeasureKind::lebesgue_box);
}

TEST_CASE("malformed input") {
  CHECK_THROWS_AS(parse_json("{"), InputError);
  CHECK_THROWS_AS(problem_from_json(parse_json(R"({"v":2,"variables":1,"measure":{"kind":"gaussian_Rn","n":1},"objective":"x1"})")),
                  InputError);
  CHECK_THROWS_AS(problem_from_json(parse_json(R"({"v":1,"variables":1,"measure":{"kind":"cauchy","n":1},"objective":"x1"})")),
                  CapabilityError);
  CHECK_THROWS_AS(matrix_from_json(parse_json(R"([[1,2],[3,4]])")), InputError);
}

TEST_CASE("matrix and maxcut round trip") {
  RationalMatrix a = RationalMatrix::from_rows({{Rational(1, 2), Rational(-3)}, {Rational(-3), Rational(0)}});
  CHECK(matrix_from_json(parse_json(matrix_to_json(a).dump())) == a);
  MaxCutInstance inst = maxcut_random(5, 0.7, 3);
  MaxCutInstance back = maxcut_from_json(parse_json(maxcut_to_json(inst).dump()));
  CHECK(back.q == inst.q);
  CHECK(back.objective() == inst.objective());
}
