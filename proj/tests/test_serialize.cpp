#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "stieltjes/pipeline.hpp"
#include "support.hpp"

using namespace testing;

TEST_CASE("constants") {
  const Constant c = C("(2*e - 3)/(e + 1)");
  const Json j = to_json(c);
  CHECK(j.dump() == R"({"num":{"-1":"-3","0":"2"},"den":{"-1":"1","0":"1"}})");
  CHECK(constant_from_json(j) == c);
  CHECK_THROWS_AS(constant_from_json(Json::parse(R"({"num":{"0":"x"}})")), ParseError);
}

TEST_CASE("operator round trip") {
  Random rnd(601);
  for (int i = 0; i < 50; ++i) {
    const Operator u = rnd.op(4);
    CHECK(operator_from_json(to_json(u)) == u);
    CHECK(operator_from_json(Json::parse(to_json(u).dump())) == u);
  }
}

TEST_CASE("Green's function round trip") {
  const Operator u = Operator::integral_term(0, X(), X()) - Operator::integral_term(1, X(), X()) +
                     Operator::local_term(P("exp(x)"), q("1/2"), 2) + D(1);
  const GreensFunction g = extract(u, {0, 1});
  const Json j = to_json(g);
  CHECK(j["branches"][0]["region"] == "xi<=x");
  CHECK(j["dirac"][0]["point"] == "1/2");
  CHECK(greens_function_from_json(j) == g);
}

TEST_CASE("problem documents") {
  const std::string text = R"({
    "operator": {"coeffs": ["-1", "0", "1"]},
    "conditions": [
      {"local": [{"point": "-1", "order": 3, "coeff": "1"}],
       "global": [{"lower": "0", "upper": "1", "integrand": "-x"}]},
      {"local": [{"point": "-1", "order": 1, "coeff": "1"}, {"point": "1", "order": 2, "coeff": "-1"}],
       "global": [{"lower": "-1", "upper": "1", "integrand": "1"}]}
    ]
  })";
  const BoundaryProblem p = problem_from_json(Json::parse(text));
  CHECK(p.op() == D(2) - Operator::identity());
  CHECK(p.conditions()[0].to_string() == "u'''(-1) - int_0^1 x*u(x) dx");
  const BoundaryProblem back = problem_from_json(to_json(p));
  CHECK(back.op() == p.op());
  CHECK(back.conditions() == p.conditions());

  CHECK_THROWS_AS(problem_from_json(Json::parse(R"({"operator": {"coeffs": ["0", "2"]}, "conditions": [{}]})")),
                  ParseError);
  CHECK_THROWS_AS(problem_from_json(Json::parse(R"({"operator": {"coeffs": ["0", "1"]}, "conditions": []})")),
                  ParseError);
  CHECK_THROWS_AS(problem_from_json(Json::parse(R"({"conditions": []})")), ParseError);
  CHECK_THROWS_AS(
      problem_from_json(Json::parse(
          R"({"operator": {"coeffs": ["0", "1"]}, "conditions": [{"local": [{"point": "0.5", "order": 0, "coeff": "1"}]}]})")),
      ParseError);
  CHECK_THROWS_AS(
      problem_from_json(Json::parse(
          R"({"operator": {"coeffs": ["0", "1"]}, "conditions": [{"local": [{"point": "0", "order": -1, "coeff": "1"}]}]})")),
      ParseError);
}

TEST_CASE("deterministic output") {
  const ProblemSpec spec = parse_spec_text(R"({"operator": {"coeffs": ["0", "0", "1"]},
    "conditions": [{"local": [{"point": "0", "order": 0, "coeff": "1"}]},
                   {"local": [{"point": "1", "order": 0, "coeff": "1"}]}]})");
  CHECK(to_json(solve(spec)).dump() == to_json(solve(spec)).dump());
}
