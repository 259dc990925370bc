#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "stieltjes/bivariate.hpp"
#include "stieltjes/error.hpp"
#include "support.hpp"

using namespace testing;

TEST_CASE("parse and print") {
  CHECK(P("3/2*x^2*exp(-x) - 1").to_string() == "3/2*x^2*exp(-x) - 1");
  CHECK(P("exp(x+2)") == C("exp(2)") * P("exp(x)"));
  CHECK(P("e^2*exp(x)") == P("exp(x+2)"));
  CHECK(P("(x+1)^2") == P("x^2 + 2*x + 1"));
  CHECK(P("x/2") == Constant(Rational(1, 2)) * X());
  CHECK(P("exp(1/2*x)^2") == P("exp(x)"));
  CHECK(P("0").is_zero());
  CHECK(parse_exppoly("xi^2", "xi") == P("x^2"));
  CHECK_THROWS_AS(P("sin(x)"), ParseError);
  CHECK_THROWS_AS(P("1/x"), ParseError);
  CHECK_THROWS_AS(P("x^(1/2)"), ParseError);
  CHECK_THROWS_AS(P("exp(x^2)"), ParseError);
  CHECK_THROWS_AS(P("2 +"), ParseError);
  CHECK_THROWS_AS(P("x/0"), ParseError);
}

TEST_CASE("derivatives and integrals") {
  CHECK(derive(P("x^3")) == P("3*x^2"));
  CHECK(derive(P("x*exp(-x)")) == P("exp(-x) - x*exp(-x)"));
  CHECK(derive(P("exp(2*x)"), 3) == P("8*exp(2*x)"));
  CHECK(integrate_from(P("1"), 0) == X());
  CHECK(integrate_from(P("x"), 1) == P("x^2/2 - 1/2"));
  CHECK(integrate_from(P("exp(x)"), 0) == P("exp(x) - 1"));
  CHECK(integrate_from(P("x*exp(x)"), 0) == P("x*exp(x) - exp(x) + 1"));
  CHECK(eval_at(P("x^2 - x"), 1).is_zero());
  CHECK(eval_at(P("exp(x)"), -1) == Constant::exp(-1));
}

TEST_CASE("calculus identities on random functions") {
  Random rnd(201);
  for (int i = 0; i < 150; ++i) {
    const ExpPoly f = rnd.exppoly(3);
    const ExpPoly g = rnd.exppoly(3);
    const Rational a = rnd.point();
    CHECK(derive(integrate_from(f, a)) == f);
    CHECK(eval_at(integrate_from(f, a), a).is_zero());
    CHECK(derive(f * g) == derive(f) * g + f * derive(g));
    CHECK(integrate_from(derive(f), a) == f - ExpPoly(eval_at(f, a)));
    CHECK(f * g == g * f);
    CHECK((f * g) * X() == f * (g * X()));
    CHECK(f * (g + X()) == f * g + f * X());
    CHECK(eval_at(f * g, a) == eval_at(f, a) * eval_at(g, a));
    CHECK(parse_exppoly(f.to_string()) == f);
  }
}

TEST_CASE("bivariate functions") {
  const auto b = BivariateExpPoly::tensor(P("x - 1"), parse_exppoly("xi", "xi"));
  CHECK(b.to_string() == "(x - 1)*xi");
  CHECK(b.eval(q("1/2"), q("1/4")) == Constant(Rational(-1, 8)));
  CHECK(b.diagonal() == P("x^2 - x"));
  CHECK(b.at_xi(2) == P("2*x - 2"));
  CHECK(b.derive_xi() == BivariateExpPoly::tensor(P("x - 1"), P("1")));
  CHECK(b.integrate_xi(0) == BivariateExpPoly::tensor(P("x/2 - 1/2"), parse_exppoly("xi^2", "xi")));
  CHECK(BivariateExpPoly::from_pairs({{P("x"), P("1")}, {P("-x"), P("1")}}).is_zero());
}

TEST_CASE("partial derivatives commute") {
  Random rnd(202);
  for (int i = 0; i < 100; ++i) {
    BivariateExpPoly b;
    for (int k = 0; k < 3; ++k) b += BivariateExpPoly::tensor(rnd.exppoly(), rnd.exppoly());
    CHECK(b.derive_x().derive_xi() == b.derive_xi().derive_x());
    CHECK(b.integrate_x(0).derive_x() == b);
    CHECK(BivariateExpPoly::from_pairs(b.pairs()) == b);
  }
}
