#include "stieltjes/pipeline.hpp"

namespace stieltjes {

ProblemSpec parse_spec(const Json& document) {
  ProblemSpec spec{problem_from_json(document), std::nullopt, std::nullopt};
  try {
    if (document.contains("basepoint")) spec.basepoint = parse_rational(document.at("basepoint").get<std::string>());
    if (document.contains("interval")) {
      const auto& iv = document.at("interval");
      if (!iv.is_array() || iv.size() != 2) throw ParseError("interval must be a pair");
      spec.interval.emplace(parse_rational(iv[0].get<std::string>()), parse_rational(iv[1].get<std::string>()));
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed options: ") + e.what());
  }
  return spec;
}

ProblemSpec parse_spec_text(const std::string& text) {
  Json document;
  try {
    document = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return parse_spec(document);
}

std::vector<ExpPoly> default_test_functions() {
  return {ExpPoly(1), ExpPoly::x(), ExpPoly::x() * ExpPoly::x(), ExpPoly::exp(1),
          ExpPoly::x() * ExpPoly::exp(-1)};
}

bool VerificationReport::ok() const {
  if (!regular || !operator_function_agreement) return false;
  for (const auto& r : residuals) {
    if (!r.equation.is_zero() || !r.kernel_agrees) return false;
    for (const auto& c : r.conditions) {
      if (!c.is_zero()) return false;
    }
  }
  return true;
}

namespace {

std::vector<Rational> extraction_points(const ProblemSpec& spec) {
  auto pts = spec.problem.evaluation_points();
  if (spec.interval) {
    pts.push_back(spec.interval->first);
    pts.push_back(spec.interval->second);
  }
  return pts;
}

std::string dirac_summary(const DiracTerm& t) {
  const std::string shift = t.point < 0 ? " + " + to_string(-t.point) : " - " + to_string(t.point);
  return "(" + (t.order % 2 == 1 ? -t.coeff : t.coeff).to_string() + ") * delta^(" + std::to_string(t.order) +
         ")(xi" + (t.point == 0 ? std::string() : shift) + ")";
}

}  // namespace

VerificationReport verify_solution(const BoundaryProblem& problem, const Operator& g_op, const GreensFunction& g,
                                   const std::vector<ExpPoly>& test_functions) {
  VerificationReport report;
  report.regular = true;
  report.operator_function_agreement = true;
  for (const auto& f : test_functions) {
    FunctionResidual r;
    r.f = f;
    const ExpPoly u = apply(g_op, f);
    r.equation = apply(problem.op(), u) - f;
    for (const auto& beta : problem.conditions()) r.conditions.push_back(beta.apply(u));
    const auto pieces = apply_greens_piecewise(g, f);
    r.kernel_agrees = true;
    for (const auto& piece : pieces) r.kernel_agrees = r.kernel_agrees && piece == u;
    report.operator_function_agreement = report.operator_function_agreement && r.kernel_agrees;
    report.residuals.push_back(std::move(r));
  }
  report.branch_count = g.branch_count();
  report.dirac_count = g.dirac_terms().size();
  report.diagonal_count = g.diagonal_terms().size();
  for (const auto& t : g.dirac_terms()) report.distributional_summary.push_back(dirac_summary(t));
  return report;
}

SolveResult solve(const ProblemSpec& spec, const std::vector<ExpPoly>& test_functions, bool check) {
  SolveResult result;
  result.basepoint = choose_basepoint(spec.problem, BasepointPolicy{spec.basepoint});
  result.classification = classify(spec.problem);
  result.op = greens_operator(spec.problem, BasepointPolicy{result.basepoint});
  result.equitable = to_equitable(result.op);
  result.greens_function = extract(result.equitable, extraction_points(spec));
  result.report = verify_solution(spec.problem, result.op, result.greens_function, test_functions);
  if (check && !result.report.ok()) throw VerificationFailure(result.report);
  return result;
}

VerificationReport verify(const ProblemSpec& spec, const std::vector<ExpPoly>& test_functions) {
  return solve(spec, test_functions, false).report;
}

Json to_json(const VerificationReport& report) {
  Json residuals = Json::array();
  for (const auto& r : report.residuals) {
    Json conds = Json::array();
    for (const auto& c : r.conditions) conds.push_back(ExpPoly(c).to_string());
    residuals.push_back({{"f", r.f.to_string()},
                         {"equation", r.equation.to_string()},
                         {"conditions", conds},
                         {"kernel_agrees", r.kernel_agrees}});
  }
  return Json{{"ok", report.ok()},
              {"regular", report.regular},
              {"operator_function_agreement", report.operator_function_agreement},
              {"branch_count", report.branch_count},
              {"dirac_count", report.dirac_count},
              {"diagonal_count", report.diagonal_count},
              {"distributional", report.distributional_summary},
              {"residuals", residuals}};
}

Json to_json(const SolveResult& result) {
  return Json{{"basepoint", to_string(result.basepoint)},
              {"classification",
               {{"well_posed", result.classification.well_posed},
                {"points", result.classification.point_count},
                {"local", result.classification.local}}},
              {"operator", to_json(result.op)},
              {"operator_text", result.op.to_string()},
              {"equitable_operator", to_json(result.equitable)},
              {"equitable_operator_text", result.equitable.to_string()},
              {"greens_function", to_json(result.greens_function)},
              {"report", to_json(result.report)}};
}

std::string render_text(const SolveResult& result) {
  std::string out;
  out += "G = " + result.op.to_string() + "\n";
  out += "G (equitable) = " + result.equitable.to_string() + "\n";
  out += "g(x, xi):\n" + render_text(result.greens_function);
  out += std::string("verified: ") + (result.report.ok() ? "yes" : "no") + "\n";
  return out;
}

std::string render_latex(const SolveResult& result) {
  std::string out;
  out += "\\[\nG = " + result.op.to_latex() + "\n\\]\n";
  out += "\\[\nG = " + result.equitable.to_latex() + "\n\\]\n";
  out += render_latex(result.greens_function);
  return out;
}

KernelReport kernel(const ProblemSpec& spec, const Rational& a, const Rational& b) {
  KernelReport report{fundamental_system(spec.problem), {}, {}};
  report.relations = kernel_relations(report.fs, a, b);
  for (const auto& rel : report.relations.relations) report.equations.push_back(relation_to_string(rel, a, b));
  return report;
}

Json to_json(const KernelReport& report) {
  Json fs = Json::array();
  for (const auto& u : report.fs.u) fs.push_back(u.to_string());
  Json matrix = Json::array();
  for (std::size_t i = 0; i < report.relations.extended.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < report.relations.extended.cols(); ++j) {
      row.push_back(ExpPoly(report.relations.extended(i, j)).to_string());
    }
    matrix.push_back(row);
  }
  Json relations = Json::array();
  for (const auto& rel : report.relations.relations) {
    Json v = Json::array();
    for (const auto& c : rel) v.push_back(ExpPoly(c).to_string());
    relations.push_back(v);
  }
  return Json{{"fundamental_system", fs}, {"matrix", matrix}, {"relations", relations}, {"equations", report.equations}};
}

}  // namespace stieltjes
