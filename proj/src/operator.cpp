#include "stieltjes/operator.hpp"

#include <algorithm>
#include <set>

namespace stieltjes {

bool operator<(const IntegralKey& a, const IntegralKey& b) {
  if (a.basepoint != b.basepoint) return a.basepoint < b.basepoint;
  return a.right < b.right;
}

bool operator<(const LocalKey& a, const LocalKey& b) {
  if (a.point != b.point) return a.point < b.point;
  return a.order < b.order;
}

bool operator<(const GlobalKey& a, const GlobalKey& b) {
  if (a.point != b.point) return a.point < b.point;
  if (a.basepoint != b.basepoint) return a.basepoint < b.basepoint;
  return a.right < b.right;
}

bool operator==(const IntegralKey& a, const IntegralKey& b) {
  return a.basepoint == b.basepoint && a.right == b.right;
}

bool operator==(const LocalKey& a, const LocalKey& b) { return a.point == b.point && a.order == b.order; }

bool operator==(const GlobalKey& a, const GlobalKey& b) {
  return a.point == b.point && a.basepoint == b.basepoint && a.right == b.right;
}

namespace {

template <typename Map, typename Key>
void accumulate(Map& map, const Key& key, const ExpPoly& value) {
  if (value.is_zero()) return;
  auto [it, inserted] = map.try_emplace(key, value);
  if (!inserted) {
    it->second += value;
    if (it->second.is_zero()) map.erase(it);
  }
}

ExpPoly monic(const Monomial& m) { return ExpPoly::monomial(Constant(1), m); }

}  // namespace

// ---------------------------------------------------------------------------
// construction

void Operator::add_diff(unsigned order, const ExpPoly& f) { accumulate(diff_, order, f); }

void Operator::add_integral(const Rational& basepoint, const ExpPoly& left, const ExpPoly& right) {
  if (left.is_zero()) return;
  for (const auto& [m, c] : right.monomials()) accumulate(integral_, IntegralKey{basepoint, m}, left * c);
}

void Operator::add_local(const ExpPoly& left, const Rational& point, unsigned order) {
  accumulate(local_, LocalKey{point, order}, left);
}

void Operator::add_global(const ExpPoly& left, const Rational& point, const Rational& basepoint,
                          const ExpPoly& right) {
  // [a] Int_a = 0
  if (left.is_zero() || point == basepoint) return;
  for (const auto& [m, c] : right.monomials()) accumulate(global_, GlobalKey{point, basepoint, m}, left * c);
}

Operator Operator::identity() { return derivation(0); }

Operator Operator::derivation(unsigned order) { return diff_term(ExpPoly(1), order); }

Operator Operator::multiplication(const ExpPoly& f) { return diff_term(f, 0); }

Operator Operator::integral(const Rational& basepoint) { return integral_term(basepoint, ExpPoly(1), ExpPoly(1)); }

Operator Operator::evaluation(const Rational& point) { return local_term(ExpPoly(1), point, 0); }

Operator Operator::diff_term(const ExpPoly& f, unsigned order) {
  Operator u;
  u.add_diff(order, f);
  return u;
}

Operator Operator::integral_term(const Rational& basepoint, const ExpPoly& left, const ExpPoly& right) {
  Operator u;
  u.add_integral(basepoint, left, right);
  return u;
}

Operator Operator::local_term(const ExpPoly& left, const Rational& point, unsigned order) {
  Operator u;
  u.add_local(left, point, order);
  return u;
}

Operator Operator::global_term(const ExpPoly& left, const Rational& point, const Rational& basepoint,
                               const ExpPoly& right) {
  Operator u;
  u.add_global(left, point, basepoint, right);
  return u;
}

bool Operator::is_zero() const { return diff_.empty() && integral_.empty() && local_.empty() && global_.empty(); }

unsigned Operator::order() const { return diff_.empty() ? 0 : diff_.rbegin()->first; }

std::vector<Rational> Operator::points() const {
  std::set<Rational> pts;
  for (const auto& [key, f] : integral_) pts.insert(key.basepoint);
  for (const auto& [key, f] : local_) pts.insert(key.point);
  for (const auto& [key, f] : global_) {
    pts.insert(key.point);
    pts.insert(key.basepoint);
  }
  return {pts.begin(), pts.end()};
}

// ---------------------------------------------------------------------------
// module structure

Operator& Operator::operator+=(const Operator& other) {
  for (const auto& [k, f] : other.diff_) accumulate(diff_, k, f);
  for (const auto& [k, f] : other.integral_) accumulate(integral_, k, f);
  for (const auto& [k, f] : other.local_) accumulate(local_, k, f);
  for (const auto& [k, f] : other.global_) accumulate(global_, k, f);
  return *this;
}

Operator& Operator::operator-=(const Operator& other) { return *this += -other; }

Operator Operator::operator-() const { return Constant(-1) * *this; }

Operator operator*(const Constant& c, const Operator& u) { return lmul_function(ExpPoly(c), u); }

bool operator==(const Operator& a, const Operator& b) {
  return a.diff_ == b.diff_ && a.integral_ == b.integral_ && a.local_ == b.local_ && a.global_ == b.global_;
}

Operator op_add(const Operator& u, const Operator& v) { return u + v; }

// ---------------------------------------------------------------------------
// left multiplication by the generators

Operator lmul_function(const ExpPoly& f, const Operator& v) {
  Operator out;
  if (f.is_zero()) return out;
  for (const auto& [k, h] : v.diff_) accumulate(out.diff_, k, f * h);
  for (const auto& [k, h] : v.integral_) accumulate(out.integral_, k, f * h);
  for (const auto& [k, h] : v.local_) accumulate(out.local_, k, f * h);
  for (const auto& [k, h] : v.global_) accumulate(out.global_, k, f * h);
  return out;
}

// D h = h' + h D ;  D Int_a = 1 ;  D [alpha] = 0
Operator lmul_derivation(const Operator& v) {
  Operator out;
  for (const auto& [i, h] : v.diff_) {
    out.add_diff(i, derive(h));
    out.add_diff(i + 1, h);
  }
  for (const auto& [key, h] : v.integral_) {
    out.add_integral(key.basepoint, derive(h), monic(key.right));
    out.add_diff(0, h * monic(key.right));
  }
  for (const auto& [key, h] : v.local_) out.add_local(derive(h), key.point, key.order);
  for (const auto& [key, h] : v.global_) out.add_global(derive(h), key.point, key.basepoint, monic(key.right));
  return out;
}

// [alpha] h = h(alpha) [alpha] ;  [alpha][beta] = [beta]
Operator lmul_evaluation(const Rational& point, const Operator& v) {
  Operator out;
  for (const auto& [i, h] : v.diff_) out.add_local(ExpPoly(eval_at(h, point)), point, i);
  for (const auto& [key, h] : v.integral_) {
    out.add_global(ExpPoly(eval_at(h, point)), point, key.basepoint, monic(key.right));
  }
  for (const auto& [key, h] : v.local_) out.add_local(ExpPoly(eval_at(h, point)), key.point, key.order);
  for (const auto& [key, h] : v.global_) {
    out.add_global(ExpPoly(eval_at(h, point)), key.point, key.basepoint, monic(key.right));
  }
  return out;
}

// Int_a h Int_b = (Int_a h) Int_b - Int_a (Int_a h)
// Int_a h D     = h - Int_a h' - h(a) [a]
// Int_a h [beta] = (Int_a h) [beta]
Operator lmul_integral(const Rational& a, const Operator& v) {
  Operator out;
  for (const auto& [i, h] : v.diff_) {
    Constant sign(1);
    ExpPoly cur = h;
    for (unsigned j = i; j > 0; --j) {
      out.add_diff(j - 1, cur * sign);
      out.add_local(ExpPoly(-sign * eval_at(cur, a)), a, j - 1);
      sign = -sign;
      cur = derive(cur);
    }
    out.add_integral(a, ExpPoly(sign), cur);
  }
  for (const auto& [key, h] : v.integral_) {
    const ExpPoly anti = integrate_from(h, a);
    const ExpPoly right = monic(key.right);
    out.add_integral(key.basepoint, anti, right);
    out.add_integral(a, ExpPoly(-1), anti * right);
  }
  for (const auto& [key, h] : v.local_) out.add_local(integrate_from(h, a), key.point, key.order);
  for (const auto& [key, h] : v.global_) {
    out.add_global(integrate_from(h, a), key.point, key.basepoint, monic(key.right));
  }
  return out;
}

Operator operator*(const Operator& u, const Operator& v) {
  Operator out;
  std::vector<Operator> derived{v};
  auto derivative = [&](unsigned i) -> const Operator& {
    while (derived.size() <= i) derived.push_back(lmul_derivation(derived.back()));
    return derived[i];
  };
  for (const auto& [i, f] : u.diff_) out += lmul_function(f, derivative(i));
  for (const auto& [key, f] : u.integral_) {
    out += lmul_function(f, lmul_integral(key.basepoint, lmul_function(monic(key.right), v)));
  }
  for (const auto& [key, f] : u.local_) out += lmul_function(f, lmul_evaluation(key.point, derivative(key.order)));
  for (const auto& [key, f] : u.global_) {
    const Operator inner = lmul_integral(key.basepoint, lmul_function(monic(key.right), v));
    out += lmul_function(f, lmul_evaluation(key.point, inner));
  }
  return out;
}

Operator op_mul(const Operator& u, const Operator& v) { return u * v; }

Operator op_pow(const Operator& u, unsigned k) {
  Operator out = Operator::identity();
  for (unsigned i = 0; i < k; ++i) out = out * u;
  return out;
}

// ---------------------------------------------------------------------------
// action

ExpPoly apply(const Operator& u, const ExpPoly& h) {
  std::vector<ExpPoly> derivs{h};
  auto derivative = [&](unsigned i) -> const ExpPoly& {
    while (derivs.size() <= i) derivs.push_back(derive(derivs.back()));
    return derivs[i];
  };
  ExpPoly out;
  for (const auto& [i, f] : u.diff_part()) out += f * derivative(i);
  for (const auto& [key, f] : u.integral_part()) out += f * integrate_from(monic(key.right) * h, key.basepoint);
  for (const auto& [key, f] : u.local_boundary()) out += f * eval_at(derivative(key.order), key.point);
  for (const auto& [key, f] : u.global_boundary()) {
    out += f * eval_at(integrate_from(monic(key.right) * h, key.basepoint), key.point);
  }
  return out;
}

// ---------------------------------------------------------------------------
// normal-form translation

Operator to_equitable(const Operator& u) {
  Operator out;
  out.diff_ = u.diff_;
  out.integral_ = u.integral_;
  out.local_ = u.local_;
  for (const auto& [key, f] : u.global_) {
    out.add_integral(key.basepoint, f, monic(key.right));
    out.add_integral(key.point, -f, monic(key.right));
  }
  return out;
}

Operator to_standard(const Operator& u, const Rational& basepoint) {
  Operator out;
  out.diff_ = u.diff_;
  out.local_ = u.local_;
  for (const auto& [key, f] : u.integral_) {
    const ExpPoly right = monic(key.right);
    out.add_integral(basepoint, f, right);
    if (key.basepoint != basepoint) out.add_global(-f, key.basepoint, basepoint, right);
  }
  for (const auto& [key, f] : u.global_) {
    const ExpPoly right = monic(key.right);
    out.add_global(f, key.point, basepoint, right);
    if (key.basepoint != basepoint) out.add_global(-f, key.basepoint, basepoint, right);
  }
  return out;
}

bool equivalent(const Operator& u, const Operator& v) { return to_equitable(u) == to_equitable(v); }

// ---------------------------------------------------------------------------
// rendering

namespace {

// Left factor as a prefix: "" for 1, "-" for -1, "f*" or "(f)*" otherwise.
std::string left_prefix(const ExpPoly& f) {
  if (f == ExpPoly(1)) return "";
  if (f == ExpPoly(-1)) return "-";
  const auto monos = f.monomials();
  if (monos.size() == 1) {
    bool atomic = false;
    monos.front().second.to_string(&atomic);
    if (atomic) return f.to_string() + "*";
  }
  return "(" + f.to_string() + ")*";
}

std::string right_suffix(const Monomial& m) {
  const ExpPoly g = ExpPoly::monomial(Constant(1), m);
  return g == ExpPoly(1) ? "" : "*" + g.to_string();
}

std::string diff_text(unsigned order) {
  if (order == 0) return "";
  return order == 1 ? "D" : "D^" + std::to_string(order);
}

std::string left_latex(const ExpPoly& f) {
  if (f == ExpPoly(1)) return "";
  if (f == ExpPoly(-1)) return "-";
  if (f.monomials().size() == 1) return f.to_latex() + " ";
  return "\\left(" + f.to_latex() + "\\right) ";
}

std::string right_latex(const Monomial& m) {
  const ExpPoly g = ExpPoly::monomial(Constant(1), m);
  return g == ExpPoly(1) ? "" : " " + g.to_latex();
}

std::string diff_latex(unsigned order) {
  if (order == 0) return "";
  return order == 1 ? "\\partial" : "\\partial^{" + std::to_string(order) + "}";
}

std::string join_terms(const std::vector<std::string>& parts) {
  if (parts.empty()) return "0";
  std::string out = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) {
    if (parts[i].front() == '-') {
      out += " - " + parts[i].substr(1);
    } else {
      out += " + " + parts[i];
    }
  }
  return out;
}

std::string strip_trailing_star(std::string s) {
  if (!s.empty() && s.back() == '*') s.pop_back();
  return s;
}

}  // namespace

std::string Operator::to_string() const {
  std::vector<std::string> parts;
  for (const auto& [i, f] : diff_) {
    if (i == 0) {
      parts.push_back(f.monomials().size() == 1 ? f.to_string() : "(" + f.to_string() + ")");
    } else {
      parts.push_back(left_prefix(f) + diff_text(i));
    }
  }
  for (const auto& [key, f] : integral_) {
    parts.push_back(left_prefix(f) + "Int[" + stieltjes::to_string(key.basepoint) + "]" + right_suffix(key.right));
  }
  for (const auto& [key, f] : local_) {
    const std::string d = diff_text(key.order);
    parts.push_back(left_prefix(f) + "E[" + stieltjes::to_string(key.point) + "]" + (d.empty() ? "" : "*" + d));
  }
  for (const auto& [key, f] : global_) {
    parts.push_back(left_prefix(f) + "E[" + stieltjes::to_string(key.point) + "]*Int[" +
                    stieltjes::to_string(key.basepoint) + "]" + right_suffix(key.right));
  }
  for (auto& p : parts) p = strip_trailing_star(p);
  return join_terms(parts);
}

std::string Operator::to_latex() const {
  std::vector<std::string> parts;
  for (const auto& [i, f] : diff_) {
    if (i == 0) {
      parts.push_back(f.monomials().size() == 1 ? f.to_latex() : "\\left(" + f.to_latex() + "\\right)");
    } else {
      parts.push_back(left_latex(f) + diff_latex(i));
    }
  }
  for (const auto& [key, f] : integral_) {
    parts.push_back(left_latex(f) + "\\int_{" + stieltjes::to_latex(key.basepoint) + "}" + right_latex(key.right));
  }
  for (const auto& [key, f] : local_) {
    const std::string d = diff_latex(key.order);
    parts.push_back(left_latex(f) + "\\lfloor " + stieltjes::to_latex(key.point) + " \\rfloor" +
                    (d.empty() ? "" : " " + d));
  }
  for (const auto& [key, f] : global_) {
    parts.push_back(left_latex(f) + "\\lfloor " + stieltjes::to_latex(key.point) + " \\rfloor \\int_{" +
                    stieltjes::to_latex(key.basepoint) + "}" + right_latex(key.right));
  }
  return join_terms(parts);
}

}  // namespace stieltjes
