#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

using namespace testing;

namespace {

BoundaryProblem dirichlet() {
  return BoundaryProblem(D(2), {StieltjesCondition::evaluation(0), StieltjesCondition::evaluation(1)});
}

BoundaryProblem four_point() {
  StieltjesCondition b1;
  b1.add_local(0, 0, 1).add_local(q("1/3"), 0, 1);
  StieltjesCondition b2;
  b2.add_local(1, 0, 1).add_local(q("2/3"), 0, 1);
  return BoundaryProblem(D(2), {b1, b2});
}

}  // namespace

TEST_CASE("conditions") {
  StieltjesCondition beta;
  beta.add_local(-1, 3, 1).add_global(0, 1, P("-x"));
  CHECK(beta.to_string() == "u'''(-1) - int_0^1 x*u(x) dx");
  CHECK(beta.apply(P("x^3")) == Constant(q("6")) - Constant(q("1/5")));
  CHECK(beta.evaluation_points() == std::vector<Rational>{-1, 0, 1});
  CHECK(beta.max_local_order() == 3u);
  StieltjesCondition twice = beta;
  twice += beta;
  CHECK(twice == Constant(2) * beta);
  CHECK(apply(beta.as_operator(), P("x^3")) == ExpPoly(beta.apply(P("x^3"))));
  beta.add_local(-1, 3, -1).add_global(0, 1, P("x"));
  CHECK(beta.is_zero());
}

TEST_CASE("problem validation") {
  CHECK_THROWS_AS(BoundaryProblem(Constant(2) * D(2), {StieltjesCondition::evaluation(0),
                                                       StieltjesCondition::evaluation(1)}),
                  DomainError);
  CHECK_THROWS_AS(BoundaryProblem(D(2), {StieltjesCondition::evaluation(0)}), DomainError);
  CHECK_THROWS_AS(BoundaryProblem(D(2) + Int("0"), {StieltjesCondition::evaluation(0), StieltjesCondition::evaluation(1)}),
                  DomainError);
  CHECK(dirichlet().evaluation_points() == std::vector<Rational>{0, 1});
}

TEST_CASE("fundamental systems") {
  const auto fs = fundamental_system(D(2) - Operator::identity());
  CHECK(fs.u.size() == 2);
  for (const auto& u : fs.u) CHECK(apply(D(2) - Operator::identity(), u).is_zero());
  CHECK(fs.d.is_exp_monomial());
  CHECK(fs.d * fs.d_inverse == ExpPoly(1));

  const auto repeated = fundamental_system(from_roots({1, 1, q("1/2")}));
  CHECK(repeated.u == std::vector<ExpPoly>{P("exp(1/2*x)"), P("exp(x)"), P("x*exp(x)")});

  CHECK_THROWS_AS(fundamental_system(D(2) + Operator::identity()), UnsupportedOperator);
  CHECK_THROWS_AS(fundamental_system(D(2) + M("x") * D(1)), UnsupportedOperator);
  CHECK_THROWS_AS(fundamental_system(D(2), {P("1"), P("x^2")}), DomainError);
  CHECK_THROWS_AS(fundamental_system(D(2), {P("x"), P("2*x")}), AlgebraError);
  CHECK_NOTHROW(fundamental_system(D(2), {P("x + 1"), P("x - 1")}));
}

TEST_CASE("evaluation matrix and regularity") {
  const auto fs = fundamental_system(D(2), {P("1"), P("x")});
  CHECK(evaluation_matrix(four_point().conditions(), fs) == Matrix{{2, q("1/3")}, {2, q("5/3")}});
  CHECK(is_regular(dirichlet()));
  const BoundaryProblem neumann(D(2), {StieltjesCondition::evaluation(0, 1), StieltjesCondition::evaluation(1, 1)});
  CHECK_FALSE(is_regular(neumann));
  CHECK_THROWS_AS(greens_operator(neumann), IrregularProblem);
  try {
    greens_operator(neumann);
  } catch (const IrregularProblem& e) {
    CHECK(e.matrix() == Matrix{{0, 1}, {0, 1}});
  }
}

TEST_CASE("right inverse and its derivatives") {
  for (const auto& t : {D(2), D(2) - Operator::identity(), D(3) - D(1), from_roots({2, q("1/2")})}) {
    const auto fs = fundamental_system(t);
    for (const auto& b : {Rational(0), Rational(1, 2)}) {
      const Operator tp = fundamental_right_inverse(fs, b);
      CHECK(t * tp == Operator::identity());
      for (const auto& f : standard_test_functions()) {
        const ExpPoly u = apply(tp, f);
        for (unsigned i = 0; i < t.order(); ++i) CHECK(eval_at(derive(u, i), b).is_zero());
      }
      for (unsigned k = 0; k <= t.order() + 2; ++k) {
        const auto r = fri_derivative(fs, k, b);
        CHECK(r.op == D(k) * tp);
        for (unsigned j = 1; j <= k && j <= t.order(); ++j) CHECK(r.rho[j - 1] == ExpPoly(j == t.order() ? 1 : 0));
      }
    }
  }
}

TEST_CASE("projector") {
  Random rnd(401);
  for (const auto& problem : {dirichlet(), four_point()}) {
    const auto fs = fundamental_system(problem);
    const Operator p = projector(problem.conditions(), fs);
    CHECK(equivalent(p * p, p));
    for (const auto& u : fs.u) CHECK(apply(p, u) == u);
    for (const auto& beta : problem.conditions()) CHECK(equivalent(beta.as_operator() * p, beta.as_operator()));
  }
}

TEST_CASE("Green's operators") {
  const Operator g = greens_operator(dirichlet());
  CHECK(g.to_string() == "x*Int[0] - Int[0]*x - x*E[1]*Int[0] + x*E[1]*Int[0]*x");
  CHECK(choose_basepoint(four_point(), {}) == 0);
  CHECK(choose_basepoint(four_point(), {q("1/2")}) == q("1/2"));

  const BoundaryProblem p = four_point();
  const Operator g0 = greens_operator(p);
  const Operator g1 = greens_operator(p, {Rational(1)});
  CHECK(equivalent(g0, g1));
  for (const auto& [key, f] : g1.integral_part()) CHECK(key.basepoint == 1);
  for (const auto& f : standard_test_functions()) {
    const ExpPoly u = apply(g0, f);
    CHECK(derive(u, 2) == f);
    for (const auto& beta : p.conditions()) CHECK(beta.apply(u).is_zero());
  }
  CHECK(apply(g0, ExpPoly()).is_zero());
}

TEST_CASE("basis recombination leaves G unchanged") {
  const BoundaryProblem p = four_point();
  StieltjesCondition mixed = p.conditions()[0];
  mixed += Constant(3) * p.conditions()[1];
  const BoundaryProblem q2(D(2), {mixed, Constant(-2) * p.conditions()[1]});
  CHECK(greens_operator(q2) == greens_operator(p));

  const BoundaryProblem with_basis(D(2), p.conditions(), std::vector<ExpPoly>{P("x + 1"), P("2*x - 1")});
  CHECK(greens_operator(with_basis) == greens_operator(p));
}

TEST_CASE("kernel relations") {
  const auto fs = fundamental_system(D(2), {P("1"), P("x")});
  const auto rel = kernel_relations(fs, 0, 1);
  CHECK(rel.extended == Matrix{{1, 0}, {0, 1}, {1, 1}, {0, 1}});
  REQUIRE(rel.relations.size() == 2);
  CHECK(relation_to_string(rel.relations[0], 0, 1) == "u(1) = u(0) + u'(0)");
  CHECK(relation_to_string(rel.relations[1], 0, 1) == "u'(1) = u'(0)");

  const auto same = kernel_relations(fs, 1, 1);
  CHECK(same.relations.size() == 2);

  const auto efs = fundamental_system(D(2) - Operator::identity(), {P("exp(x)"), P("exp(-x)")});
  const auto erel = kernel_relations(efs, 0, 1);
  CHECK(erel.relations.size() == 2);
  for (const auto& r : erel.relations) {
    for (std::size_t j = 0; j < 2; ++j) {
      Constant s;
      for (std::size_t i = 0; i < 4; ++i) s += r[i] * erel.extended(i, j);
      CHECK(s.is_zero());
    }
  }
}

TEST_CASE("classification") {
  const auto c = classify(dirichlet());
  CHECK(c.well_posed);
  CHECK(c.local);
  CHECK(c.point_count == 2);
  StieltjesCondition b1;
  b1.add_local(-1, 3, 1).add_global(0, 1, P("-x"));
  StieltjesCondition b2;
  b2.add_local(-1, 1, 1).add_local(1, 2, -1).add_global(-1, 1, 1);
  const auto d = classify(BoundaryProblem(D(2) - Operator::identity(), {b1, b2}));
  CHECK_FALSE(d.well_posed);
  CHECK_FALSE(d.local);
  CHECK(d.point_count == 3);
}
