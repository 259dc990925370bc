#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "stieltjes/boundary.hpp"
#include "stieltjes/greens_function.hpp"
#include "stieltjes/serialize.hpp"

namespace stieltjes {

/// A parsed problem document plus solver options.
struct ProblemSpec {
  BoundaryProblem problem;
  std::optional<Rational> basepoint;
  std::optional<std::pair<Rational, Rational>> interval;
};

ProblemSpec parse_spec(const Json& document);
ProblemSpec parse_spec_text(const std::string& text);

/// Default test functions: 1, x, x^2, e^x, x e^-x.
std::vector<ExpPoly> default_test_functions();

struct FunctionResidual {
  ExpPoly f;
  ExpPoly equation;                // T(Gf) - f
  std::vector<Constant> conditions;  // beta_i(Gf)
  bool kernel_agrees = false;      // Green's function action equals G f
};

struct VerificationReport {
  bool regular = false;
  std::vector<FunctionResidual> residuals;
  bool operator_function_agreement = false;
  std::size_t branch_count = 0;
  std::size_t dirac_count = 0;
  std::size_t diagonal_count = 0;
  std::vector<std::string> distributional_summary;

  /// Every residual is an exact zero and the kernel agrees with G.
  bool ok() const;
};

struct SolveResult {
  Rational basepoint;
  ProblemClass classification;
  Operator op;         // standard form
  Operator equitable;  // equitable form
  GreensFunction greens_function;
  VerificationReport report;
};

/// Raised when a computed Green's function fails verification.
class VerificationFailure : public Error {
 public:
  explicit VerificationFailure(VerificationReport report)
      : Error("Green's function failed verification"), report_(std::move(report)) {}
  const VerificationReport& report() const { return report_; }

 private:
  VerificationReport report_;
};

/// Green's operator, equitable form, Green's function and report. With
/// `check` set, throws VerificationFailure unless the report is clean.
SolveResult solve(const ProblemSpec& spec, const std::vector<ExpPoly>& test_functions = default_test_functions(),
                  bool check = true);

VerificationReport verify(const ProblemSpec& spec,
                          const std::vector<ExpPoly>& test_functions = default_test_functions());

/// Checks G against the defining properties and its extracted kernel.
VerificationReport verify_solution(const BoundaryProblem& problem, const Operator& g_op, const GreensFunction& g,
                                   const std::vector<ExpPoly>& test_functions);

Json to_json(const VerificationReport& report);
Json to_json(const SolveResult& result);
std::string render_text(const SolveResult& result);
std::string render_latex(const SolveResult& result);

struct KernelReport {
  FundamentalSystem fs;
  KernelRelations relations;
  std::vector<std::string> equations;
};

/// Extended evaluation matrix at a and b with its left-kernel relations.
KernelReport kernel(const ProblemSpec& spec, const Rational& a, const Rational& b);
Json to_json(const KernelReport& report);

}  // namespace stieltjes
