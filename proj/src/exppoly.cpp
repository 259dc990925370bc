#include "stieltjes/exppoly.hpp"

#include <algorithm>

#include "stieltjes/error.hpp"

namespace stieltjes {

bool operator<(const Monomial& a, const Monomial& b) {
  if (a.freq != b.freq) return a.freq < b.freq;
  return a.degree < b.degree;
}

ExpPoly::ExpPoly(const Constant& c) {
  if (!c.is_zero()) terms_[Rational(0)] = {c};
}

ExpPoly ExpPoly::x() { return monomial(Constant(1), Monomial{Rational(0), 1}); }

ExpPoly ExpPoly::exp(const Rational& freq) { return monomial(Constant(1), Monomial{freq, 0}); }

ExpPoly ExpPoly::monomial(const Constant& coeff, const Monomial& m) {
  ExpPoly p;
  p.add_term(m.freq, m.degree, coeff);
  return p;
}

bool ExpPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second.size() == 1);
}

Constant ExpPoly::constant_value() const {
  if (!is_constant()) throw AlgebraError("expression " + to_string() + " is not constant");
  return terms_.empty() ? Constant() : terms_.begin()->second.front();
}

bool ExpPoly::is_exp_monomial() const {
  return terms_.size() == 1 && terms_.begin()->second.size() == 1;
}

std::vector<std::pair<Monomial, Constant>> ExpPoly::monomials() const {
  std::vector<std::pair<Monomial, Constant>> out;
  for (const auto& [freq, coeffs] : terms_) {
    for (unsigned n = 0; n < coeffs.size(); ++n) {
      if (!coeffs[n].is_zero()) out.emplace_back(Monomial{freq, n}, coeffs[n]);
    }
  }
  return out;
}

Constant ExpPoly::coefficient(const Monomial& m) const {
  const auto it = terms_.find(m.freq);
  if (it == terms_.end() || m.degree >= it->second.size()) return Constant();
  return it->second[m.degree];
}

unsigned ExpPoly::max_degree() const {
  unsigned deg = 0;
  for (const auto& [freq, coeffs] : terms_) deg = std::max<unsigned>(deg, coeffs.size() - 1);
  return deg;
}

void ExpPoly::trim(Terms::iterator it) {
  auto& coeffs = it->second;
  while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
  if (coeffs.empty()) terms_.erase(it);
}

void ExpPoly::add_term(const Rational& freq, unsigned degree, const Constant& c) {
  if (c.is_zero()) return;
  auto it = terms_.try_emplace(freq).first;
  auto& coeffs = it->second;
  if (coeffs.size() <= degree) coeffs.resize(degree + 1);
  coeffs[degree] += c;
  trim(it);
}

ExpPoly& ExpPoly::operator+=(const ExpPoly& other) {
  for (const auto& [freq, coeffs] : other.terms_) {
    auto it = terms_.try_emplace(freq).first;
    auto& mine = it->second;
    if (mine.size() < coeffs.size()) mine.resize(coeffs.size());
    for (std::size_t n = 0; n < coeffs.size(); ++n) mine[n] += coeffs[n];
    trim(it);
  }
  return *this;
}

ExpPoly& ExpPoly::operator-=(const ExpPoly& other) { return *this += -other; }

ExpPoly& ExpPoly::operator*=(const Constant& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [freq, coeffs] : terms_) {
    for (auto& coeff : coeffs) coeff *= c;
  }
  return *this;
}

ExpPoly operator*(const ExpPoly& a, const ExpPoly& b) {
  ExpPoly out;
  for (const auto& [fa, ca] : a.terms_) {
    for (const auto& [fb, cb] : b.terms_) {
      std::vector<Constant> prod(ca.size() + cb.size() - 1);
      for (std::size_t i = 0; i < ca.size(); ++i) {
        if (ca[i].is_zero()) continue;
        for (std::size_t j = 0; j < cb.size(); ++j) prod[i + j] += ca[i] * cb[j];
      }
      const Rational freq = fa + fb;
      for (unsigned n = 0; n < prod.size(); ++n) out.add_term(freq, n, prod[n]);
    }
  }
  return out;
}

ExpPoly ExpPoly::operator-() const {
  ExpPoly out = *this;
  for (auto& [freq, coeffs] : out.terms_) {
    for (auto& c : coeffs) c = -c;
  }
  return out;
}

namespace {

std::string monomial_text(const Monomial& m, const std::string& var) {
  std::string out;
  if (m.degree == 1) out = var;
  if (m.degree > 1) out = var + "^" + std::to_string(m.degree);
  if (m.freq != 0) {
    std::string arg;
    if (m.freq == 1) {
      arg = var;
    } else if (m.freq == -1) {
      arg = "-" + var;
    } else {
      arg = to_string(m.freq) + "*" + var;
    }
    if (!out.empty()) out += "*";
    out += "exp(" + arg + ")";
  }
  return out;
}

std::string monomial_latex(const Monomial& m, const std::string& var) {
  std::string out;
  if (m.degree == 1) out = var;
  if (m.degree > 1) out = var + "^{" + std::to_string(m.degree) + "}";
  if (m.freq != 0) {
    std::string arg;
    if (m.freq == 1) {
      arg = var;
    } else if (m.freq == -1) {
      arg = "-" + var;
    } else if (is_integer(m.freq)) {
      arg = to_string(m.freq) + var;
    } else {
      arg = to_latex(m.freq) + " " + var;
    }
    out += "e^{" + arg + "}";
  }
  return out;
}

std::string join_signed(const std::vector<std::string>& parts) {
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

// Orders terms by descending frequency, then descending degree.
std::vector<std::pair<Monomial, Constant>> display_order(const ExpPoly& f) {
  auto terms = f.monomials();
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    if (a.first.degree != b.first.degree) return a.first.degree > b.first.degree;
    return a.first.freq > b.first.freq;
  });
  return terms;
}

}  // namespace

std::string ExpPoly::to_string(const std::string& var) const {
  std::vector<std::string> parts;
  for (const auto& [m, c] : display_order(*this)) {
    const std::string mono = monomial_text(m, var);
    bool atomic = false;
    const std::string cs = c.to_string(&atomic);
    if (mono.empty()) {
      parts.push_back(atomic ? cs : "(" + cs + ")");
    } else if (c == Constant(1)) {
      parts.push_back(mono);
    } else if (c == Constant(-1)) {
      parts.push_back("-" + mono);
    } else {
      parts.push_back((atomic ? cs : "(" + cs + ")") + "*" + mono);
    }
  }
  return join_signed(parts);
}

std::string ExpPoly::to_latex(const std::string& var) const {
  std::vector<std::string> parts;
  for (const auto& [m, c] : display_order(*this)) {
    const std::string mono = monomial_latex(m, var);
    bool atomic = false;
    const std::string cs = c.to_latex(&atomic);
    if (mono.empty()) {
      parts.push_back(atomic ? cs : "\\left(" + cs + "\\right)");
    } else if (c == Constant(1)) {
      parts.push_back(mono);
    } else if (c == Constant(-1)) {
      parts.push_back("-" + mono);
    } else {
      parts.push_back((atomic ? cs : "\\left(" + cs + "\\right)") + " " + mono);
    }
  }
  return join_signed(parts);
}

ExpPoly derive(const ExpPoly& f) {
  ExpPoly out;
  for (const auto& [m, c] : f.monomials()) {
    if (m.degree > 0) {
      out += ExpPoly::monomial(c * Constant(Rational(m.degree)), Monomial{m.freq, m.degree - 1});
    }
    if (m.freq != 0) out += ExpPoly::monomial(c * Constant(m.freq), m);
  }
  return out;
}

ExpPoly derive(const ExpPoly& f, unsigned times) {
  ExpPoly out = f;
  for (unsigned i = 0; i < times && !out.is_zero(); ++i) out = derive(out);
  return out;
}

ExpPoly integrate_from(const ExpPoly& f, const Rational& a) {
  ExpPoly anti;
  for (const auto& [m, c] : f.monomials()) {
    if (m.freq == 0) {
      anti += ExpPoly::monomial(c * Constant(Rational(1, m.degree + 1)), Monomial{Rational(0), m.degree + 1});
      continue;
    }
    // x^n e^{lx}: e^{lx} * sum_k (-1)^k n!/(n-k)! x^{n-k} / l^{k+1}
    Rational factor = 1 / m.freq;
    for (unsigned k = 0; k <= m.degree; ++k) {
      anti += ExpPoly::monomial(c * Constant(factor), Monomial{m.freq, m.degree - k});
      factor *= -Rational(m.degree - k) / m.freq;
    }
  }
  return anti - ExpPoly(eval_at(anti, a));
}

Constant eval_at(const ExpPoly& f, const Rational& q) {
  Constant out;
  for (const auto& [freq, coeffs] : f.terms()) {
    Constant poly_value;
    Rational power = 1;
    for (const auto& c : coeffs) {
      if (!c.is_zero()) poly_value += c * Constant(power);
      power *= q;
    }
    out += poly_value * Constant::exp(freq * q);
  }
  return out;
}

}  // namespace stieltjes
