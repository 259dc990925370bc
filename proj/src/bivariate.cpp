#include "stieltjes/bivariate.hpp"

namespace stieltjes {

namespace {

ExpPoly xi_monomial(const Monomial& m) { return ExpPoly::monomial(Constant(1), m); }

}  // namespace

void BivariateExpPoly::add(const Monomial& m, const ExpPoly& f) {
  if (f.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, f);
  if (!inserted) {
    it->second += f;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

BivariateExpPoly BivariateExpPoly::tensor(const ExpPoly& f, const ExpPoly& g) {
  BivariateExpPoly out;
  if (f.is_zero()) return out;
  for (const auto& [m, c] : g.monomials()) out.add(m, f * c);
  return out;
}

BivariateExpPoly BivariateExpPoly::from_pairs(const std::vector<std::pair<ExpPoly, ExpPoly>>& pairs) {
  BivariateExpPoly out;
  for (const auto& [f, g] : pairs) out += tensor(f, g);
  return out;
}

std::vector<std::pair<ExpPoly, ExpPoly>> BivariateExpPoly::pairs() const {
  std::vector<std::pair<ExpPoly, ExpPoly>> out;
  for (const auto& [m, f] : terms_) out.emplace_back(f, xi_monomial(m));
  return out;
}

BivariateExpPoly& BivariateExpPoly::operator+=(const BivariateExpPoly& other) {
  for (const auto& [m, f] : other.terms_) add(m, f);
  return *this;
}

BivariateExpPoly& BivariateExpPoly::operator-=(const BivariateExpPoly& other) {
  for (const auto& [m, f] : other.terms_) add(m, -f);
  return *this;
}

BivariateExpPoly BivariateExpPoly::operator-() const {
  BivariateExpPoly out;
  for (const auto& [m, f] : terms_) out.terms_.emplace(m, -f);
  return out;
}

BivariateExpPoly BivariateExpPoly::times_xi(const ExpPoly& g) const {
  BivariateExpPoly out;
  for (const auto& [m, f] : terms_) out += tensor(f, xi_monomial(m) * g);
  return out;
}

BivariateExpPoly BivariateExpPoly::derive_x() const {
  BivariateExpPoly out;
  for (const auto& [m, f] : terms_) out.add(m, derive(f));
  return out;
}

BivariateExpPoly BivariateExpPoly::derive_xi() const {
  BivariateExpPoly out;
  for (const auto& [m, f] : terms_) out += tensor(f, derive(xi_monomial(m)));
  return out;
}

BivariateExpPoly BivariateExpPoly::integrate_x(const Rational& a) const {
  BivariateExpPoly out;
  for (const auto& [m, f] : terms_) out.add(m, integrate_from(f, a));
  return out;
}

BivariateExpPoly BivariateExpPoly::integrate_xi(const Rational& a) const {
  BivariateExpPoly out;
  for (const auto& [m, f] : terms_) out += tensor(f, integrate_from(xi_monomial(m), a));
  return out;
}

Constant BivariateExpPoly::eval(const Rational& x, const Rational& xi) const {
  Constant out;
  for (const auto& [m, f] : terms_) out += eval_at(f, x) * eval_at(xi_monomial(m), xi);
  return out;
}

ExpPoly BivariateExpPoly::diagonal() const {
  ExpPoly out;
  for (const auto& [m, f] : terms_) out += f * xi_monomial(m);
  return out;
}

ExpPoly BivariateExpPoly::at_xi(const Rational& q) const {
  ExpPoly out;
  for (const auto& [m, f] : terms_) out += f * eval_at(xi_monomial(m), q);
  return out;
}

std::string BivariateExpPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const std::string xi = xi_monomial(it->first).to_string("xi");
    std::string part;
    if (xi == "1") {
      part = it->second.to_string();
    } else if (it->second == ExpPoly(1)) {
      part = xi;
    } else if (it->second == ExpPoly(-1)) {
      part = "-" + xi;
    } else if (it->second.monomials().size() == 1) {
      part = it->second.to_string() + "*" + xi;
    } else {
      part = "(" + it->second.to_string() + ")*" + xi;
    }
    if (!out.empty()) out += part.front() == '-' ? " - " + part.substr(1) : " + " + part;
    else out = part;
  }
  return out;
}

std::string BivariateExpPoly::to_latex() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const std::string xi = xi_monomial(it->first).to_latex("\\xi");
    const auto f_pairs = it->second.monomials();
    std::string part;
    if (xi == "1") {
      part = it->second.to_latex();
    } else if (it->second == ExpPoly(1)) {
      part = xi;
    } else if (it->second == ExpPoly(-1)) {
      part = "-" + xi;
    } else if (f_pairs.size() == 1) {
      part = it->second.to_latex() + " " + xi;
    } else {
      part = "\\left(" + it->second.to_latex() + "\\right) " + xi;
    }
    if (!out.empty()) out += part.front() == '-' ? " - " + part.substr(1) : " + " + part;
    else out = part;
  }
  return out;
}

}  // namespace stieltjes
