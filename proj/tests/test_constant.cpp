#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "stieltjes/constant.hpp"
#include "stieltjes/error.hpp"
#include "support.hpp"

using namespace testing;

TEST_CASE("rational literals") {
  CHECK(parse_rational("3") == 3);
  CHECK(parse_rational("-3/6") == Rational(-1, 2));
  CHECK(to_string(parse_rational("4/6")) == "2/3");
  CHECK(to_latex(Rational(-1, 2)) == "-\\frac{1}{2}");
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("1.5"), ParseError);
  CHECK_THROWS_AS(parse_rational(""), ParseError);
  CHECK(pow(Rational(2, 3), 3) == Rational(8, 27));
}

TEST_CASE("group algebra elements") {
  const ExpSum a = ExpSum::monomial(2, 1) + ExpSum(Rational(-3));
  CHECK(a.to_string() == "2*exp(1) - 3");
  CHECK((a - a).is_zero());
  const ExpSum sq = a * a;
  CHECK(sq.to_string() == "4*exp(2) - 12*exp(1) + 9");
  CHECK(ExpSum(Rational(5)).is_rational());
  CHECK_FALSE(a.is_rational());
}

TEST_CASE("constants normalize to lowest terms") {
  const Constant e = Constant::exp(1);
  const Constant x = (e * e - Constant(1)) / (e - Constant(1));
  CHECK(x == e + Constant(1));
  CHECK(x.denominator() == ExpSum(Rational(1)));
  CHECK(Constant::exp(q("1/2")) * Constant::exp(q("1/2")) == e);
  CHECK((e / e) == Constant(1));
  CHECK((Constant(3) / Constant(6)).rational_value() == Rational(1, 2));
  CHECK_THROWS_AS(Constant(1) / Constant(0), AlgebraError);
  CHECK_THROWS_AS(e.rational_value(), AlgebraError);
}

TEST_CASE("denominator with fractional exponents") {
  const Constant s = Constant::exp(q("1/2"));
  const Constant lhs = (Constant::exp(1) - Constant(1)) / (s - Constant(1));
  CHECK(lhs == s + Constant(1));
  const Constant r = Constant(1) / (Constant::exp(-1) + Constant(2));
  CHECK(r * (Constant::exp(-1) + Constant(2)) == Constant(1));
}

TEST_CASE("field laws on random constants") {
  Random rnd(101);
  for (int i = 0; i < 200; ++i) {
    const Constant a = rnd.constant() + rnd.constant();
    const Constant b = rnd.constant() + rnd.constant();
    const Constant c = rnd.constant();
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == Constant(0));
    if (!b.is_zero()) {
      CHECK((a / b) * b == a);
      CHECK(b * b.inverse() == Constant(1));
    }
  }
}

TEST_CASE("constant text round trip") {
  Random rnd(102);
  for (int i = 0; i < 100; ++i) {
    const Constant a = rnd.constant() + rnd.constant();
    const Constant b = rnd.constant() + Constant(2);
    if (b.is_zero()) continue;
    const Constant c = a / b;
    CHECK(parse_constant(c.to_string()) == c);
  }
}
