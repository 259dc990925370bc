#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "stieltjes/error.hpp"
#include "stieltjes/matrix.hpp"
#include "stieltjes/operator.hpp"

namespace stieltjes {

/// a * u^(order)(point)
struct LocalTerm {
  Rational point;
  unsigned order = 0;
  Constant coeff;
};

/// Int_lower^upper integrand(xi) u(xi) dxi
struct GlobalTerm {
  Rational lower;
  Rational upper;
  ExpPoly integrand;
};

/// Boundary functional with a local part (point evaluations of derivatives)
/// and a global part (definite integrals). Terms with the same point and
/// order, or the same limits, are merged.
class StieltjesCondition {
 public:
  StieltjesCondition() = default;

  /// u^(order)(point)
  static StieltjesCondition evaluation(const Rational& point, unsigned order = 0);

  StieltjesCondition& add_local(const Rational& point, unsigned order, const Constant& coeff);
  StieltjesCondition& add_global(const Rational& lower, const Rational& upper, const ExpPoly& integrand);

  std::vector<LocalTerm> local_terms() const;
  std::vector<GlobalTerm> global_terms() const;
  bool is_zero() const { return local_.empty() && global_.empty(); }
  bool has_global() const { return !global_.empty(); }
  std::optional<unsigned> max_local_order() const;

  /// Every local point and both limits of every global term, sorted.
  std::vector<Rational> evaluation_points() const;

  /// The condition as an operator: local terms a [alpha] D^i, global terms
  /// [upper] Int_lower g.
  Operator as_operator() const;
  Constant apply(const ExpPoly& u) const;

  StieltjesCondition& operator+=(const StieltjesCondition& other);
  friend StieltjesCondition operator*(const Constant& c, const StieltjesCondition& beta);
  friend bool operator==(const StieltjesCondition& a, const StieltjesCondition& b) {
    return a.local_ == b.local_ && a.global_ == b.global_;
  }

  /// Functional notation, e.g. "u'''(-1) - int_0^1 x*u(x) dx".
  std::string to_string() const;

 private:
  std::map<std::pair<Rational, unsigned>, Constant> local_;
  std::map<std::pair<Rational, Rational>, ExpPoly> global_;
};

/// Monic differential operator of order n with n Stieltjes conditions.
class BoundaryProblem {
 public:
  /// Throws DomainError unless op is a monic differential operator of order
  /// n >= 1 with exactly n conditions (and n supplied functions, if any).
  BoundaryProblem(Operator op, std::vector<StieltjesCondition> conditions,
                  std::optional<std::vector<ExpPoly>> fundamental_system = std::nullopt);

  const Operator& op() const { return op_; }
  const std::vector<StieltjesCondition>& conditions() const { return conditions_; }
  const std::optional<std::vector<ExpPoly>>& supplied_fundamental_system() const { return supplied_; }
  unsigned order() const { return op_.order(); }
  std::vector<Rational> evaluation_points() const;

 private:
  Operator op_;
  std::vector<StieltjesCondition> conditions_;
  std::optional<std::vector<ExpPoly>> supplied_;
};

/// Kernel basis u_1..u_n with Wronskian data: d = det W and d_j = det W_j
/// (column j replaced by the last unit vector).
struct FundamentalSystem {
  std::vector<ExpPoly> u;
  ExpPoly d;
  std::vector<ExpPoly> d_j;
  ExpPoly d_inverse;
};

/// Raised when the evaluation matrix is singular.
class IrregularProblem : public Error {
 public:
  explicit IrregularProblem(Matrix m) : Error("boundary problem not regular"), matrix_(std::move(m)) {}
  const Matrix& matrix() const { return matrix_; }

 private:
  Matrix matrix_;
};

/// Basis of ker T for constant-coefficient T whose characteristic polynomial
/// splits over Q. Throws UnsupportedOperator otherwise.
FundamentalSystem fundamental_system(const Operator& op);
/// Validates a user-supplied basis: each u_j must lie in ker T and the
/// Wronskian must be a nonzero exponential monomial.
FundamentalSystem fundamental_system(const Operator& op, const std::vector<ExpPoly>& u);
FundamentalSystem fundamental_system(const BoundaryProblem& problem);

/// Wronskian determinant and Cramer determinants for an arbitrary list.
FundamentalSystem wronskian_data(const std::vector<ExpPoly>& u);

/// Entry (i, j) = beta_i(u_j).
Matrix evaluation_matrix(const std::vector<StieltjesCondition>& conditions, const FundamentalSystem& fs);
bool is_regular(const BoundaryProblem& problem);

/// Variation of constants: sum_j u_j Int_b (d_j / d).
Operator fundamental_right_inverse(const FundamentalSystem& fs, const Rational& basepoint);

struct FriDerivative {
  Operator op;
  std::vector<ExpPoly> rho;  // rho_1 .. rho_k
};

/// Closed form of D^k composed with the fundamental right inverse:
/// sum_j u_j^(k) Int_b (d_j/d) + sum_{j=1..k} D^(k-j) rho_j with
/// rho_j = (1/d) sum_i u_i^(j-1) d_i.
FriDerivative fri_derivative(const FundamentalSystem& fs, unsigned k, const Rational& basepoint);

/// Projector onto ker T along the admissible functions:
/// P = sum_{j,i} u_j (M^-1)_{j,i} beta_i. Throws IrregularProblem.
Operator projector(const std::vector<StieltjesCondition>& conditions, const FundamentalSystem& fs);

struct BasepointPolicy {
  /// Integral basepoint of the right inverse; defaults to the smallest
  /// evaluation point of the problem.
  std::optional<Rational> basepoint;
};

Rational choose_basepoint(const BoundaryProblem& problem, const BasepointPolicy& policy);

/// G = (1 - P) T^+ in standard form relative to the chosen basepoint.
Operator greens_operator(const BoundaryProblem& problem, const BasepointPolicy& policy = {});

struct KernelRelations {
  Matrix extended;  // rows u_j^(i)(a), then u_j^(i)(b), i < n
  std::vector<std::vector<Constant>> relations;
};

KernelRelations kernel_relations(const FundamentalSystem& fs, const Rational& a, const Rational& b);

/// Relation vector as an equation between boundary values, e.g.
/// "u(1) = u(0) + u'(0)".
std::string relation_to_string(const std::vector<Constant>& relation, const Rational& a, const Rational& b);

/// Classification of the given condition basis.
struct ProblemClass {
  bool well_posed = true;  // every local order below n
  std::size_t point_count = 0;
  bool local = true;  // no global terms
};

ProblemClass classify(const BoundaryProblem& problem);

}  // namespace stieltjes
