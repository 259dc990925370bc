#include "stieltjes/constant.hpp"

#include <utility>
#include <vector>

#include "stieltjes/error.hpp"

namespace stieltjes {

namespace {

// Dense univariate polynomials over Q, lowest degree first, no trailing zeros.
using Poly = std::vector<Rational>;

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// a = q*b + r
std::pair<Poly, Poly> divmod(Poly a, const Poly& b) {
  trim(a);
  Poly q;
  if (a.size() < b.size()) return {q, a};
  q.assign(a.size() - b.size() + 1, Rational(0));
  const Rational& lead = b.back();
  for (std::size_t k = a.size(); k >= b.size(); --k) {
    const std::size_t top = k - 1;
    if (a[top] == 0) continue;
    const Rational factor = a[top] / lead;
    const std::size_t shift = top - (b.size() - 1);
    q[shift] = factor;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= factor * b[i];
  }
  trim(a);
  trim(q);
  return {q, a};
}

Poly gcd(Poly a, Poly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const Rational lead = a.back();
    for (auto& c : a) c /= lead;
  }
  return a;
}

Poly to_poly(const ExpSum& s, const Rational& base, const Integer& scale) {
  Poly p;
  for (const auto& [q, c] : s.terms()) {
    const Rational k = (q - base) * scale;
    const auto idx = static_cast<std::size_t>(k.get_num().get_ui());
    if (p.size() <= idx) p.resize(idx + 1, Rational(0));
    p[idx] = c;
  }
  return p;
}

ExpSum from_poly(const Poly& p, const Rational& base, const Integer& scale) {
  ExpSum s;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] == 0) continue;
    Rational offset(Integer(static_cast<unsigned long>(i)), scale);
    offset.canonicalize();
    s += ExpSum::monomial(p[i], base + offset);
  }
  return s;
}

std::string exp_symbol_text(const Rational& q) { return "exp(" + to_string(q) + ")"; }

std::string exp_symbol_latex(const Rational& q) {
  if (q == 1) return "e";
  return "e^{" + to_latex(q) + "}";
}

}  // namespace

// ---------------------------------------------------------------------------
// ExpSum

ExpSum::ExpSum(const Rational& c) {
  if (c != 0) terms_.emplace(Rational(0), c);
}

ExpSum ExpSum::monomial(const Rational& coeff, const Rational& exponent) {
  ExpSum s;
  if (coeff != 0) s.terms_.emplace(exponent, coeff);
  return s;
}

bool ExpSum::is_rational() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
}

void ExpSum::add_term(const Rational& exponent, const Rational& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

ExpSum ExpSum::times_monomial(const Rational& coeff, const Rational& exponent) const {
  ExpSum out;
  if (coeff == 0) return out;
  for (const auto& [q, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), q + exponent, c * coeff);
  return out;
}

ExpSum& ExpSum::operator+=(const ExpSum& other) {
  for (const auto& [q, c] : other.terms_) add_term(q, c);
  return *this;
}

ExpSum& ExpSum::operator-=(const ExpSum& other) {
  for (const auto& [q, c] : other.terms_) add_term(q, -c);
  return *this;
}

ExpSum operator*(const ExpSum& a, const ExpSum& b) {
  ExpSum out;
  for (const auto& [qa, ca] : a.terms_) {
    for (const auto& [qb, cb] : b.terms_) out.add_term(qa + qb, ca * cb);
  }
  return out;
}

ExpSum ExpSum::operator-() const { return times_monomial(Rational(-1), Rational(0)); }

std::string ExpSum::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [q, c] = *it;
    const Rational mag = abs(c);
    std::string body;
    if (q == 0) {
      body = stieltjes::to_string(mag);
    } else if (mag == 1) {
      body = exp_symbol_text(q);
    } else {
      body = stieltjes::to_string(mag) + "*" + exp_symbol_text(q);
    }
    if (first) {
      out = (c < 0 ? "-" : "") + body;
    } else {
      out += (c < 0 ? " - " : " + ") + body;
    }
    first = false;
  }
  return out;
}

std::string ExpSum::to_latex() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [q, c] = *it;
    const Rational mag = abs(c);
    std::string body;
    if (q == 0) {
      body = stieltjes::to_latex(mag);
    } else if (mag == 1) {
      body = exp_symbol_latex(q);
    } else {
      body = stieltjes::to_latex(mag) + exp_symbol_latex(q);
    }
    if (first) {
      out = (c < 0 ? "-" : "") + body;
    } else {
      out += (c < 0 ? " - " : " + ") + body;
    }
    first = false;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Constant

Constant::Constant(const Rational& q) : num_(q), den_(Rational(1)) {}

Constant::Constant(const ExpSum& s) : num_(s), den_(Rational(1)) {}

Constant::Constant(ExpSum num, ExpSum den, bool do_normalize) : num_(std::move(num)), den_(std::move(den)) {
  if (do_normalize) normalize();
}

Constant Constant::fraction(const ExpSum& num, const ExpSum& den) {
  if (den.is_zero()) throw AlgebraError("zero divisor");
  return Constant(num, den, true);
}

Constant Constant::exp(const Rational& q) { return Constant(ExpSum::monomial(Rational(1), q)); }

Rational Constant::rational_value() const {
  if (!is_rational()) throw AlgebraError("constant " + to_string() + " is not rational");
  if (num_.is_zero()) return 0;
  return num_.leading().second / den_.leading().second;
}

void Constant::normalize() {
  if (num_.is_zero()) {
    den_ = ExpSum(Rational(1));
    return;
  }
  if (!den_.is_monomial()) {
    Integer scale = 1;
    for (const ExpSum* s : {&num_, &den_}) {
      for (const auto& term : s->terms()) scale = lcm(scale, term.first.get_den());
    }
    const Rational num_base = num_.terms().begin()->first;
    const Rational den_base = den_.terms().begin()->first;
    Poly pn = to_poly(num_, num_base, scale);
    Poly pd = to_poly(den_, den_base, scale);
    const Poly g = gcd(pn, pd);
    if (g.size() > 1) {
      num_ = from_poly(divmod(pn, g).first, num_base, scale);
      den_ = from_poly(divmod(pd, g).first, den_base, scale);
    }
  }
  const auto [q, c] = den_.leading();
  const Rational inv = 1 / c;
  num_ = num_.times_monomial(inv, -q);
  den_ = den_.times_monomial(inv, -q);
}

Constant& Constant::operator+=(const Constant& other) {
  if (other.is_zero()) return *this;
  if (den_ == other.den_) {
    num_ += other.num_;
  } else {
    num_ = num_ * other.den_ + other.num_ * den_;
    den_ = den_ * other.den_;
  }
  normalize();
  return *this;
}

Constant& Constant::operator-=(const Constant& other) { return *this += -other; }

Constant& Constant::operator*=(const Constant& other) {
  num_ = num_ * other.num_;
  den_ = den_ * other.den_;
  normalize();
  return *this;
}

Constant& Constant::operator/=(const Constant& other) { return *this *= other.inverse(); }

Constant Constant::operator-() const { return Constant(-num_, den_, false); }

Constant Constant::inverse() const {
  if (is_zero()) throw AlgebraError("zero divisor");
  return Constant(den_, num_, true);
}

std::string Constant::to_string(bool* atomic) const {
  const bool unit_den = den_ == ExpSum(Rational(1));
  if (unit_den) {
    if (atomic) *atomic = num_.terms().size() <= 1;
    return num_.to_string();
  }
  if (atomic) *atomic = true;
  const std::string num = num_.terms().size() == 1 ? num_.to_string() : "(" + num_.to_string() + ")";
  return num + "/(" + den_.to_string() + ")";
}

std::string Constant::to_latex(bool* atomic) const {
  const bool unit_den = den_ == ExpSum(Rational(1));
  if (unit_den) {
    if (atomic) *atomic = num_.terms().size() <= 1;
    return num_.to_latex();
  }
  if (atomic) *atomic = true;
  return "\\frac{" + num_.to_latex() + "}{" + den_.to_latex() + "}";
}

}  // namespace stieltjes
