#pragma once

#include <json.hpp>

#include "stieltjes/boundary.hpp"
#include "stieltjes/greens_function.hpp"

namespace stieltjes {

using Json = nlohmann::ordered_json;

/// {"num": {"q": "c", ...}, "den": {...}} with rational strings.
Json to_json(const Constant& c);
Constant constant_from_json(const Json& j);

Json to_json(const BivariateExpPoly& b);
BivariateExpPoly bivariate_from_json(const Json& j);

/// {"diff": [...], "integral": [...], "local": [...], "global": [...]}
Json to_json(const Operator& u);
Operator operator_from_json(const Json& j);

Json to_json(const GreensFunction& g);
GreensFunction greens_function_from_json(const Json& j);

Json to_json(const StieltjesCondition& beta);
StieltjesCondition condition_from_json(const Json& j);

/// Problem document:
///   {"operator": {"coeffs": ["expr", ...]},
///    "conditions": [{"local": [...], "global": [...]}, ...],
///    "fundamental_system": ["expr", ...]}
/// Coefficients run from order 0 upward and the last one must be "1".
/// Throws ParseError on malformed input.
BoundaryProblem problem_from_json(const Json& j);
Json to_json(const BoundaryProblem& problem);

}  // namespace stieltjes
