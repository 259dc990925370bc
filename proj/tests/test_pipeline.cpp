#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "stieltjes/pipeline.hpp"
#include "support.hpp"

using namespace testing;

namespace {

const char* kDirichlet = R"({"operator": {"coeffs": ["0", "0", "1"]},
  "conditions": [{"local": [{"point": "0", "order": 0, "coeff": "1"}]},
                 {"local": [{"point": "1", "order": 0, "coeff": "1"}]}]})";

const char* kNonlocal = R"({"operator": {"coeffs": ["-1", "0", "1"]},
  "conditions": [
    {"local": [{"point": "-1", "order": 3, "coeff": "1"}],
     "global": [{"lower": "0", "upper": "1", "integrand": "-x"}]},
    {"local": [{"point": "-1", "order": 1, "coeff": "1"}, {"point": "1", "order": 2, "coeff": "-1"}],
     "global": [{"lower": "-1", "upper": "1", "integrand": "1"}]}]})";

}  // namespace

TEST_CASE("solve the Dirichlet problem") {
  const SolveResult r = solve(parse_spec_text(kDirichlet));
  CHECK(r.basepoint == 0);
  CHECK(r.report.ok());
  CHECK(r.report.branch_count == 2);
  CHECK(r.report.distributional_summary.empty());
  CHECK(render_text(r).find("0 <= xi <= 1, xi <= x: (x - 1)*xi") != std::string::npos);
  CHECK(to_json(r)["report"]["ok"] == true);
}

TEST_CASE("verify the nonlocal problem") {
  const VerificationReport report = verify(parse_spec_text(kNonlocal));
  CHECK(report.ok());
  CHECK(report.residuals.size() == 5);
  for (const auto& r : report.residuals) {
    CHECK(r.equation.is_zero());
    for (const auto& c : r.conditions) CHECK(c.is_zero());
  }
  CHECK(report.dirac_count == 2);
}

TEST_CASE("options") {
  ProblemSpec spec = parse_spec_text(kDirichlet);
  spec.basepoint = Rational(1);
  const SolveResult r = solve(spec);
  CHECK(r.basepoint == 1);
  CHECK(r.report.ok());
  spec.interval.emplace(-1, 2);
  CHECK(solve(spec).greens_function.breakpoints() == std::vector<Rational>{-1, 0, 1, 2});
  const auto report = verify(spec, {ExpPoly()});
  CHECK(report.ok());
  CHECK(report.residuals.front().equation.is_zero());
}

TEST_CASE("errors") {
  CHECK_THROWS_AS(parse_spec_text("{"), ParseError);
  CHECK_THROWS_AS(parse_spec_text(R"({"operator": {"coeffs": ["0", "1"]}, "conditions": [{}], "interval": ["0"]})"),
                  ParseError);
  const std::string neumann = R"({"operator": {"coeffs": ["0", "0", "1"]},
    "conditions": [{"local": [{"point": "0", "order": 1, "coeff": "1"}]},
                   {"local": [{"point": "1", "order": 1, "coeff": "1"}]}]})";
  CHECK_THROWS_AS(solve(parse_spec_text(neumann)), IrregularProblem);
  const std::string oscillator = R"({"operator": {"coeffs": ["1", "0", "1"]},
    "conditions": [{"local": [{"point": "0", "order": 0, "coeff": "1"}]},
                   {"local": [{"point": "1", "order": 0, "coeff": "1"}]}]})";
  CHECK_THROWS_AS(solve(parse_spec_text(oscillator)), UnsupportedOperator);
}

TEST_CASE("kernel relations") {
  const KernelReport k = kernel(parse_spec_text(R"({"operator": {"coeffs": ["0", "0", "1"]},
    "conditions": [{"local": [{"point": "0", "order": 0, "coeff": "1"}]},
                   {"local": [{"point": "1", "order": 0, "coeff": "1"}]}],
    "fundamental_system": ["1", "x"]})"),
                                0, 1);
  CHECK(k.equations == std::vector<std::string>{"u(1) = u(0) + u'(0)", "u'(1) = u'(0)"});
  CHECK(to_json(k)["matrix"][2] == Json::array({"1", "1"}));
}
