#include "stieltjes/serialize.hpp"

#include "stieltjes/error.hpp"

namespace stieltjes {

namespace {

Json sum_to_json(const ExpSum& s) {
  Json out = Json::object();
  for (const auto& [q, c] : s.terms()) out[to_string(q)] = to_string(c);
  return out;
}

ExpSum sum_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("expected an object of exponent -> coefficient");
  ExpSum s;
  for (const auto& [key, value] : j.items()) {
    s += ExpSum::monomial(parse_rational(value.get<std::string>()), parse_rational(key));
  }
  return s;
}

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) throw ParseError(std::string("missing field '") + name + "'");
  return j.at(name);
}

std::string text_field(const Json& j, const char* name) {
  const Json& v = field(j, name);
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  throw ParseError(std::string("field '") + name + "' must be a string");
}

Rational rational_field(const Json& j, const char* name) { return parse_rational(text_field(j, name)); }

unsigned order_field(const Json& j, const char* name) {
  const Json& v = field(j, name);
  if (!v.is_number_integer() || v.get<long long>() < 0) throw ParseError(std::string("field '") + name + "' must be a nonnegative integer");
  return static_cast<unsigned>(v.get<long long>());
}

ExpPoly monic(const Monomial& m) { return ExpPoly::monomial(Constant(1), m); }

}  // namespace

Json to_json(const Constant& c) { return Json{{"num", sum_to_json(c.numerator())}, {"den", sum_to_json(c.denominator())}}; }

Constant constant_from_json(const Json& j) {
  return Constant::fraction(sum_from_json(field(j, "num")), sum_from_json(field(j, "den")));
}

Json to_json(const BivariateExpPoly& b) {
  Json out = Json::array();
  for (const auto& [f, g] : b.pairs()) out.push_back({{"x", f.to_string()}, {"xi", g.to_string("xi")}});
  return out;
}

BivariateExpPoly bivariate_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("bivariate term must be an array of {x, xi} pairs");
  std::vector<std::pair<ExpPoly, ExpPoly>> pairs;
  for (const auto& item : j) {
    pairs.emplace_back(parse_exppoly(text_field(item, "x")), parse_exppoly(text_field(item, "xi"), "xi"));
  }
  return BivariateExpPoly::from_pairs(pairs);
}

Json to_json(const Operator& u) {
  Json diff = Json::array();
  for (const auto& [i, f] : u.diff_part()) diff.push_back({{"order", i}, {"coeff", f.to_string()}});
  Json integral = Json::array();
  for (const auto& [key, f] : u.integral_part()) {
    integral.push_back(
        {{"basepoint", to_string(key.basepoint)}, {"left", f.to_string()}, {"right", monic(key.right).to_string()}});
  }
  Json local = Json::array();
  for (const auto& [key, f] : u.local_boundary()) {
    local.push_back({{"point", to_string(key.point)}, {"order", key.order}, {"left", f.to_string()}});
  }
  Json global = Json::array();
  for (const auto& [key, f] : u.global_boundary()) {
    global.push_back({{"point", to_string(key.point)},
                      {"basepoint", to_string(key.basepoint)},
                      {"left", f.to_string()},
                      {"right", monic(key.right).to_string()}});
  }
  return Json{{"diff", diff}, {"integral", integral}, {"local", local}, {"global", global}};
}

Operator operator_from_json(const Json& j) {
  Operator u;
  if (j.contains("diff")) {
    for (const auto& t : j.at("diff")) u += Operator::diff_term(parse_exppoly(text_field(t, "coeff")), order_field(t, "order"));
  }
  if (j.contains("integral")) {
    for (const auto& t : j.at("integral")) {
      u += Operator::integral_term(rational_field(t, "basepoint"), parse_exppoly(text_field(t, "left")),
                                   parse_exppoly(text_field(t, "right")));
    }
  }
  if (j.contains("local")) {
    for (const auto& t : j.at("local")) {
      u += Operator::local_term(parse_exppoly(text_field(t, "left")), rational_field(t, "point"), order_field(t, "order"));
    }
  }
  if (j.contains("global")) {
    for (const auto& t : j.at("global")) {
      u += Operator::global_term(parse_exppoly(text_field(t, "left")), rational_field(t, "point"),
                                 rational_field(t, "basepoint"), parse_exppoly(text_field(t, "right")));
    }
  }
  return u;
}

Json to_json(const GreensFunction& g) {
  Json breakpoints = Json::array();
  for (const auto& p : g.breakpoints()) breakpoints.push_back(to_string(p));
  Json branches = Json::array();
  for (std::size_t i = 0; i < g.interval_count(); ++i) {
    branches.push_back({{"interval", i + 1}, {"region", "xi<=x"}, {"term", to_json(g.branch(i, Region::kXiBelowX))}});
    branches.push_back({{"interval", i + 1}, {"region", "x<=xi"}, {"term", to_json(g.branch(i, Region::kXBelowXi))}});
  }
  Json dirac = Json::array();
  for (const auto& t : g.dirac_terms()) {
    dirac.push_back({{"point", to_string(t.point)}, {"order", t.order}, {"coeff", t.coeff.to_string()}});
  }
  Json diagonal = Json::array();
  for (const auto& t : g.diagonal_terms()) diagonal.push_back({{"order", t.order}, {"coeff", t.coeff.to_string()}});
  return Json{{"breakpoints", breakpoints}, {"branches", branches}, {"dirac", dirac}, {"diagonal", diagonal}};
}

GreensFunction greens_function_from_json(const Json& j) {
  std::vector<Rational> breakpoints;
  for (const auto& p : field(j, "breakpoints")) breakpoints.push_back(parse_rational(p.get<std::string>()));
  std::vector<std::array<BivariateExpPoly, 2>> branches(breakpoints.empty() ? 0 : breakpoints.size() - 1);
  for (const auto& b : field(j, "branches")) {
    const unsigned interval = order_field(b, "interval");
    if (interval == 0 || interval > branches.size()) throw ParseError("branch interval out of range");
    const std::string region = text_field(b, "region");
    if (region != "xi<=x" && region != "x<=xi") throw ParseError("unknown region '" + region + "'");
    branches[interval - 1][region == "xi<=x" ? 0 : 1] = bivariate_from_json(field(b, "term"));
  }
  std::vector<DiracTerm> dirac;
  if (j.contains("dirac")) {
    for (const auto& t : j.at("dirac")) {
      dirac.push_back({rational_field(t, "point"), order_field(t, "order"), parse_exppoly(text_field(t, "coeff"))});
    }
  }
  std::vector<DiagonalTerm> diagonal;
  if (j.contains("diagonal")) {
    for (const auto& t : j.at("diagonal")) diagonal.push_back({order_field(t, "order"), parse_exppoly(text_field(t, "coeff"))});
  }
  return GreensFunction(std::move(breakpoints), std::move(branches), std::move(dirac), std::move(diagonal));
}

Json to_json(const StieltjesCondition& beta) {
  Json local = Json::array();
  for (const auto& t : beta.local_terms()) {
    local.push_back({{"point", to_string(t.point)}, {"order", t.order}, {"coeff", ExpPoly(t.coeff).to_string()}});
  }
  Json global = Json::array();
  for (const auto& t : beta.global_terms()) {
    global.push_back({{"lower", to_string(t.lower)}, {"upper", to_string(t.upper)}, {"integrand", t.integrand.to_string()}});
  }
  return Json{{"local", local}, {"global", global}};
}

StieltjesCondition condition_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("condition must be an object");
  StieltjesCondition beta;
  if (j.contains("local")) {
    for (const auto& t : j.at("local")) {
      const Constant coeff = t.contains("coeff") ? parse_constant(text_field(t, "coeff")) : Constant(1);
      beta.add_local(rational_field(t, "point"), order_field(t, "order"), coeff);
    }
  }
  if (j.contains("global")) {
    for (const auto& t : j.at("global")) {
      beta.add_global(rational_field(t, "lower"), rational_field(t, "upper"), parse_exppoly(text_field(t, "integrand")));
    }
  }
  return beta;
}

BoundaryProblem problem_from_json(const Json& j) {
  try {
    const Json& coeffs = field(field(j, "operator"), "coeffs");
    if (!coeffs.is_array() || coeffs.size() < 2) throw ParseError("operator needs at least two coefficients");
    Operator op;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      if (!coeffs[i].is_string()) throw ParseError("operator coefficients must be strings");
      op += Operator::diff_term(parse_exppoly(coeffs[i].get<std::string>()), static_cast<unsigned>(i));
    }
    if (op.order() + 1 != coeffs.size() || op.diff_part().at(op.order()) != ExpPoly(1)) {
      throw ParseError("leading operator coefficient must be \"1\"");
    }
    std::vector<StieltjesCondition> conditions;
    for (const auto& c : field(j, "conditions")) conditions.push_back(condition_from_json(c));
    std::optional<std::vector<ExpPoly>> fs;
    if (j.contains("fundamental_system") && !j.at("fundamental_system").is_null()) {
      fs.emplace();
      for (const auto& u : j.at("fundamental_system")) fs->push_back(parse_exppoly(u.get<std::string>()));
    }
    return BoundaryProblem(std::move(op), std::move(conditions), std::move(fs));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed problem document: ") + e.what());
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

Json to_json(const BoundaryProblem& problem) {
  Json coeffs = Json::array();
  for (unsigned i = 0; i <= problem.order(); ++i) {
    const auto it = problem.op().diff_part().find(i);
    coeffs.push_back(it == problem.op().diff_part().end() ? std::string("0") : it->second.to_string());
  }
  Json conditions = Json::array();
  for (const auto& beta : problem.conditions()) conditions.push_back(to_json(beta));
  Json out{{"operator", {{"coeffs", coeffs}}}, {"conditions", conditions}};
  if (problem.supplied_fundamental_system()) {
    Json fs = Json::array();
    for (const auto& u : *problem.supplied_fundamental_system()) fs.push_back(u.to_string());
    out["fundamental_system"] = fs;
  }
  return out;
}

}  // namespace stieltjes
