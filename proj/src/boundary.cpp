#include "stieltjes/boundary.hpp"

#include <algorithm>
#include <set>

namespace stieltjes {

namespace {

std::string derivative_name(unsigned order) {
  if (order <= 3) return "u" + std::string(order, '\'');
  return "u^(" + std::to_string(order) + ")";
}

std::string signed_join(const std::vector<std::string>& parts) {
  if (parts.empty()) return "0";
  std::string out = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) {
    out += parts[i].front() == '-' ? " - " + parts[i].substr(1) : " + " + parts[i];
  }
  return out;
}

std::string scaled(const Constant& c, const std::string& body) {
  if (c == Constant(1)) return body;
  if (c == Constant(-1)) return "-" + body;
  bool atomic = false;
  const std::string cs = c.to_string(&atomic);
  return (atomic ? cs : "(" + cs + ")") + "*" + body;
}

ExpPoly determinant(const std::vector<std::vector<ExpPoly>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return ExpPoly(1);
  if (n == 1) return m[0][0];
  ExpPoly det;
  for (std::size_t col = 0; col < n; ++col) {
    if (m[0][col].is_zero()) continue;
    std::vector<std::vector<ExpPoly>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<ExpPoly> row;
      for (std::size_t j = 0; j < n; ++j) {
        if (j != col) row.push_back(m[i][j]);
      }
      minor.push_back(std::move(row));
    }
    const ExpPoly term = m[0][col] * determinant(minor);
    if (col % 2 == 0) {
      det += term;
    } else {
      det -= term;
    }
  }
  return det;
}

// Characteristic polynomial coefficients, lowest degree first.
std::vector<Rational> characteristic_polynomial(const Operator& op) {
  std::vector<Rational> coeffs(op.order() + 1, Rational(0));
  for (const auto& [i, f] : op.diff_part()) {
    if (!f.is_constant() || !f.constant_value().is_rational()) {
      throw UnsupportedOperator("fundamental system must be supplied");
    }
    coeffs[i] = f.constant_value().rational_value();
  }
  return coeffs;
}

Rational horner(const std::vector<Rational>& p, const Rational& r) {
  Rational acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * r + *it;
  return acc;
}

// p / (x - r), assuming p(r) = 0.
std::vector<Rational> deflate(const std::vector<Rational>& p, const Rational& r) {
  std::vector<Rational> q(p.size() - 1, Rational(0));
  Rational carry = 0;
  for (std::size_t k = p.size() - 1; k > 0; --k) {
    carry = carry * r + p[k];
    q[k - 1] = carry;
  }
  return q;
}

std::vector<Integer> divisors(const Integer& n) {
  std::vector<Integer> out;
  const Integer m = abs(n);
  if (m > Integer("1000000000000")) throw UnsupportedOperator("fundamental system must be supplied");
  for (Integer d = 1; d * d <= m; ++d) {
    if (m % d == 0) {
      out.push_back(d);
      if (d * d != m) out.push_back(m / d);
    }
  }
  return out;
}

// Rational roots with multiplicity; throws if the polynomial does not split.
std::vector<std::pair<Rational, unsigned>> rational_roots(std::vector<Rational> p) {
  std::vector<std::pair<Rational, unsigned>> roots;
  auto add_root = [&](const Rational& r) {
    if (!roots.empty() && roots.back().first == r) {
      ++roots.back().second;
    } else {
      roots.emplace_back(r, 1);
    }
  };
  while (p.size() > 1 && p.front() == 0) {
    p.erase(p.begin());
    add_root(Rational(0));
  }
  while (p.size() > 1) {
    Integer scale = 1;
    for (const auto& c : p) scale = lcm(scale, c.get_den());
    const Integer lead = Rational(p.back() * scale).get_num();
    const Integer tail = Rational(p.front() * scale).get_num();
    std::optional<Rational> found;
    for (const auto& num : divisors(tail)) {
      for (const auto& den : divisors(lead)) {
        for (int sign : {1, -1}) {
          Rational r(num * sign, den);
          r.canonicalize();
          if (horner(p, r) == 0) {
            found = r;
            break;
          }
        }
        if (found) break;
      }
      if (found) break;
    }
    if (!found) throw UnsupportedOperator("fundamental system must be supplied");
    p = deflate(p, *found);
    add_root(*found);
  }
  // Multiplicities are only contiguous for a repeated root found in a row;
  // merge any stragglers.
  std::map<Rational, unsigned> merged;
  for (const auto& [r, k] : roots) merged[r] += k;
  return {merged.begin(), merged.end()};
}

}  // namespace

// ---------------------------------------------------------------------------
// StieltjesCondition

StieltjesCondition StieltjesCondition::evaluation(const Rational& point, unsigned order) {
  StieltjesCondition beta;
  beta.add_local(point, order, Constant(1));
  return beta;
}

StieltjesCondition& StieltjesCondition::add_local(const Rational& point, unsigned order, const Constant& coeff) {
  if (coeff.is_zero()) return *this;
  auto [it, inserted] = local_.try_emplace({point, order}, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) local_.erase(it);
  }
  return *this;
}

StieltjesCondition& StieltjesCondition::add_global(const Rational& lower, const Rational& upper,
                                                   const ExpPoly& integrand) {
  if (integrand.is_zero() || lower == upper) return *this;
  auto [it, inserted] = global_.try_emplace({lower, upper}, integrand);
  if (!inserted) {
    it->second += integrand;
    if (it->second.is_zero()) global_.erase(it);
  }
  return *this;
}

std::vector<LocalTerm> StieltjesCondition::local_terms() const {
  std::vector<LocalTerm> out;
  for (const auto& [key, c] : local_) out.push_back({key.first, key.second, c});
  return out;
}

std::vector<GlobalTerm> StieltjesCondition::global_terms() const {
  std::vector<GlobalTerm> out;
  for (const auto& [key, g] : global_) out.push_back({key.first, key.second, g});
  return out;
}

std::optional<unsigned> StieltjesCondition::max_local_order() const {
  std::optional<unsigned> out;
  for (const auto& [key, c] : local_) out = std::max(out.value_or(0), key.second);
  return out;
}

std::vector<Rational> StieltjesCondition::evaluation_points() const {
  std::set<Rational> pts;
  for (const auto& [key, c] : local_) pts.insert(key.first);
  for (const auto& [key, g] : global_) {
    pts.insert(key.first);
    pts.insert(key.second);
  }
  return {pts.begin(), pts.end()};
}

Operator StieltjesCondition::as_operator() const {
  Operator op;
  for (const auto& [key, c] : local_) op += Operator::local_term(ExpPoly(c), key.first, key.second);
  for (const auto& [key, g] : global_) op += Operator::global_term(ExpPoly(1), key.second, key.first, g);
  return op;
}

Constant StieltjesCondition::apply(const ExpPoly& u) const {
  Constant out;
  for (const auto& [key, c] : local_) out += c * eval_at(derive(u, key.second), key.first);
  for (const auto& [key, g] : global_) out += eval_at(integrate_from(g * u, key.first), key.second);
  return out;
}

StieltjesCondition& StieltjesCondition::operator+=(const StieltjesCondition& other) {
  for (const auto& [key, c] : other.local_) add_local(key.first, key.second, c);
  for (const auto& [key, g] : other.global_) add_global(key.first, key.second, g);
  return *this;
}

StieltjesCondition operator*(const Constant& c, const StieltjesCondition& beta) {
  StieltjesCondition out;
  for (const auto& [key, a] : beta.local_) out.add_local(key.first, key.second, c * a);
  for (const auto& [key, g] : beta.global_) out.add_global(key.first, key.second, g * c);
  return out;
}

std::string StieltjesCondition::to_string() const {
  std::vector<std::string> parts;
  for (const auto& [key, c] : local_) {
    parts.push_back(scaled(c, derivative_name(key.second) + "(" + stieltjes::to_string(key.first) + ")"));
  }
  for (const auto& [key, g] : global_) {
    const std::string limits = "_" + stieltjes::to_string(key.first) + "^" + stieltjes::to_string(key.second);
    if (g == ExpPoly(1)) {
      parts.push_back("int" + limits + " u(x) dx");
    } else if (g == ExpPoly(-1)) {
      parts.push_back("-int" + limits + " u(x) dx");
    } else if (g.monomials().size() == 1) {
      const std::string gs = g.to_string();
      parts.push_back(gs.front() == '-' ? "-int" + limits + " " + gs.substr(1) + "*u(x) dx"
                                        : "int" + limits + " " + gs + "*u(x) dx");
    } else {
      parts.push_back("int" + limits + " (" + g.to_string() + ")*u(x) dx");
    }
  }
  return signed_join(parts);
}

// ---------------------------------------------------------------------------
// BoundaryProblem

BoundaryProblem::BoundaryProblem(Operator op, std::vector<StieltjesCondition> conditions,
                                 std::optional<std::vector<ExpPoly>> fundamental_system)
    : op_(std::move(op)), conditions_(std::move(conditions)), supplied_(std::move(fundamental_system)) {
  if (!op_.is_differential() || op_.diff_part().empty()) {
    throw DomainError("boundary problem operator must be a differential operator");
  }
  const unsigned n = op_.order();
  if (n == 0 || op_.diff_part().at(n) != ExpPoly(1)) throw DomainError("differential operator must be monic of order >= 1");
  if (conditions_.size() != n) {
    throw DomainError("expected " + std::to_string(n) + " boundary conditions, got " +
                      std::to_string(conditions_.size()));
  }
  if (supplied_ && supplied_->size() != n) throw DomainError("fundamental system must have exactly n functions");
}

std::vector<Rational> BoundaryProblem::evaluation_points() const {
  std::set<Rational> pts;
  for (const auto& beta : conditions_) {
    for (const auto& p : beta.evaluation_points()) pts.insert(p);
  }
  return {pts.begin(), pts.end()};
}

// ---------------------------------------------------------------------------
// fundamental systems

FundamentalSystem wronskian_data(const std::vector<ExpPoly>& u) {
  const std::size_t n = u.size();
  std::vector<std::vector<ExpPoly>> w(n, std::vector<ExpPoly>(n));
  for (std::size_t j = 0; j < n; ++j) {
    ExpPoly cur = u[j];
    for (std::size_t i = 0; i < n; ++i) {
      w[i][j] = cur;
      cur = derive(cur);
    }
  }
  FundamentalSystem fs;
  fs.u = u;
  fs.d = determinant(w);
  for (std::size_t j = 0; j < n; ++j) {
    auto wj = w;
    for (std::size_t i = 0; i < n; ++i) wj[i][j] = ExpPoly(i + 1 == n ? 1 : 0);
    fs.d_j.push_back(determinant(wj));
  }
  if (!fs.d.is_exp_monomial()) throw AlgebraError("Wronskian not invertible in coefficient algebra");
  const auto [m, c] = fs.d.monomials().front();
  if (m.degree != 0) throw AlgebraError("Wronskian not invertible in coefficient algebra");
  fs.d_inverse = ExpPoly::monomial(c.inverse(), Monomial{-m.freq, 0});
  return fs;
}

FundamentalSystem fundamental_system(const Operator& op) {
  if (!op.is_differential()) throw DomainError("fundamental systems exist for differential operators only");
  std::vector<ExpPoly> u;
  for (const auto& [root, multiplicity] : rational_roots(characteristic_polynomial(op))) {
    for (unsigned j = 0; j < multiplicity; ++j) u.push_back(ExpPoly::monomial(Constant(1), Monomial{root, j}));
  }
  return wronskian_data(u);
}

FundamentalSystem fundamental_system(const Operator& op, const std::vector<ExpPoly>& u) {
  if (u.size() != op.order()) throw DomainError("fundamental system must have exactly n functions");
  for (const auto& f : u) {
    if (!apply(op, f).is_zero()) throw DomainError("supplied function " + f.to_string() + " is not in the kernel of T");
  }
  return wronskian_data(u);
}

FundamentalSystem fundamental_system(const BoundaryProblem& problem) {
  if (problem.supplied_fundamental_system()) {
    return fundamental_system(problem.op(), *problem.supplied_fundamental_system());
  }
  return fundamental_system(problem.op());
}

// ---------------------------------------------------------------------------
// regularity and Green's operators

Matrix evaluation_matrix(const std::vector<StieltjesCondition>& conditions, const FundamentalSystem& fs) {
  Matrix m(conditions.size(), fs.u.size());
  for (std::size_t i = 0; i < conditions.size(); ++i) {
    for (std::size_t j = 0; j < fs.u.size(); ++j) m(i, j) = conditions[i].apply(fs.u[j]);
  }
  return m;
}

bool is_regular(const BoundaryProblem& problem) {
  const FundamentalSystem fs = fundamental_system(problem);
  return !evaluation_matrix(problem.conditions(), fs).determinant().is_zero();
}

Operator fundamental_right_inverse(const FundamentalSystem& fs, const Rational& basepoint) {
  Operator out;
  for (std::size_t j = 0; j < fs.u.size(); ++j) {
    out += Operator::integral_term(basepoint, fs.u[j], fs.d_j[j] * fs.d_inverse);
  }
  return out;
}

FriDerivative fri_derivative(const FundamentalSystem& fs, unsigned k, const Rational& basepoint) {
  FriDerivative result;
  for (std::size_t j = 0; j < fs.u.size(); ++j) {
    result.op += Operator::integral_term(basepoint, derive(fs.u[j], k), fs.d_j[j] * fs.d_inverse);
  }
  for (unsigned j = 1; j <= k; ++j) {
    ExpPoly sum;
    for (std::size_t i = 0; i < fs.u.size(); ++i) sum += derive(fs.u[i], j - 1) * fs.d_j[i];
    ExpPoly rho = fs.d_inverse * sum;
    result.op += Operator::derivation(k - j) * Operator::multiplication(rho);
    result.rho.push_back(std::move(rho));
  }
  return result;
}

Operator projector(const std::vector<StieltjesCondition>& conditions, const FundamentalSystem& fs) {
  const Matrix m = evaluation_matrix(conditions, fs);
  if (m.rows() != m.cols() || m.determinant().is_zero()) throw IrregularProblem(m);
  const Matrix inv = m.inverse();
  Operator p;
  for (std::size_t i = 0; i < conditions.size(); ++i) {
    ExpPoly left;
    for (std::size_t j = 0; j < fs.u.size(); ++j) left += fs.u[j] * inv(j, i);
    p += Operator::multiplication(left) * conditions[i].as_operator();
  }
  return p;
}

Rational choose_basepoint(const BoundaryProblem& problem, const BasepointPolicy& policy) {
  if (policy.basepoint) return *policy.basepoint;
  const auto pts = problem.evaluation_points();
  return pts.empty() ? Rational(0) : pts.front();
}

Operator greens_operator(const BoundaryProblem& problem, const BasepointPolicy& policy) {
  const FundamentalSystem fs = fundamental_system(problem);
  const Operator p = projector(problem.conditions(), fs);
  const Rational b = choose_basepoint(problem, policy);
  const Operator fri = fundamental_right_inverse(fs, b);
  return to_standard(fri - p * fri, b);
}

// ---------------------------------------------------------------------------
// extended evaluation matrix

KernelRelations kernel_relations(const FundamentalSystem& fs, const Rational& a, const Rational& b) {
  const std::size_t n = fs.u.size();
  KernelRelations out;
  out.extended = Matrix(2 * n, n);
  for (std::size_t j = 0; j < n; ++j) {
    ExpPoly cur = fs.u[j];
    for (std::size_t i = 0; i < n; ++i) {
      out.extended(i, j) = eval_at(cur, a);
      out.extended(n + i, j) = eval_at(cur, b);
      cur = derive(cur);
    }
  }
  out.relations = out.extended.left_kernel();
  return out;
}

std::string relation_to_string(const std::vector<Constant>& relation, const Rational& a, const Rational& b) {
  const std::size_t n = relation.size() / 2;
  std::vector<std::string> lhs;
  std::vector<std::string> rhs;
  for (std::size_t k = 0; k < relation.size(); ++k) {
    const Constant& c = relation[k];
    if (c.is_zero()) continue;
    const std::string value =
        derivative_name(static_cast<unsigned>(k % n)) + "(" + to_string(k < n ? a : b) + ")";
    const bool negative = !c.is_rational() ? false : c.rational_value() < 0;
    if (negative) {
      rhs.push_back(scaled(-c, value));
    } else {
      lhs.push_back(scaled(c, value));
    }
  }
  return signed_join(lhs) + " = " + signed_join(rhs);
}

ProblemClass classify(const BoundaryProblem& problem) {
  ProblemClass out;
  const unsigned n = problem.order();
  for (const auto& beta : problem.conditions()) {
    if (const auto order = beta.max_local_order(); order && *order >= n) out.well_posed = false;
    if (beta.has_global()) out.local = false;
  }
  out.point_count = problem.evaluation_points().size();
  return out;
}

}  // namespace stieltjes
