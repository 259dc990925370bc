#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "stieltjes/constant.hpp"
#include "stieltjes/rational.hpp"

namespace stieltjes {

/// Basis function x^degree * e^(freq * x).
struct Monomial {
  Rational freq;
  unsigned degree = 0;
};

bool operator<(const Monomial& a, const Monomial& b);
inline bool operator==(const Monomial& a, const Monomial& b) {
  return a.freq == b.freq && a.degree == b.degree;
}

/// Univariate exponential polynomial  sum_l (sum_n c_{l,n} x^n) e^(l x)
/// with rational frequencies and Constant coefficients.
///
/// Stored canonically: no trailing zero coefficients and no empty frequency
/// entries, so equality is structural.
class ExpPoly {
 public:
  using Terms = std::map<Rational, std::vector<Constant>>;

  ExpPoly() = default;
  ExpPoly(const Constant& c);  // NOLINT(google-explicit-constructor)
  ExpPoly(const Rational& q) : ExpPoly(Constant(q)) {}  // NOLINT(google-explicit-constructor)
  ExpPoly(long q) : ExpPoly(Constant(q)) {}  // NOLINT(google-explicit-constructor)

  static ExpPoly x();
  static ExpPoly exp(const Rational& freq);
  static ExpPoly monomial(const Constant& coeff, const Monomial& m);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Throws AlgebraError unless is_constant().
  Constant constant_value() const;
  /// c * e^(mu x) with c nonzero.
  bool is_exp_monomial() const;
  /// Nonzero (monomial, coefficient) pairs in canonical order.
  std::vector<std::pair<Monomial, Constant>> monomials() const;
  Constant coefficient(const Monomial& m) const;
  unsigned max_degree() const;

  ExpPoly& operator+=(const ExpPoly& other);
  ExpPoly& operator-=(const ExpPoly& other);
  ExpPoly& operator*=(const Constant& c);
  friend ExpPoly operator+(ExpPoly a, const ExpPoly& b) { return a += b; }
  friend ExpPoly operator-(ExpPoly a, const ExpPoly& b) { return a -= b; }
  friend ExpPoly operator*(const ExpPoly& a, const ExpPoly& b);
  friend ExpPoly operator*(ExpPoly a, const Constant& c) { return a *= c; }
  friend ExpPoly operator*(const Constant& c, ExpPoly a) { return a *= c; }
  ExpPoly operator-() const;
  friend bool operator==(const ExpPoly& a, const ExpPoly& b) { return a.terms_ == b.terms_; }

  /// Text syntax accepted by parse_exppoly, e.g. "3/2*x^2*exp(-x) - 1".
  std::string to_string(const std::string& var = "x") const;
  std::string to_latex(const std::string& var = "x") const;

 private:
  void add_term(const Rational& freq, unsigned degree, const Constant& c);
  void trim(Terms::iterator it);

  Terms terms_;
};

ExpPoly derive(const ExpPoly& f);
ExpPoly derive(const ExpPoly& f, unsigned times);
/// The antiderivative F with F' = f and F(a) = 0.
ExpPoly integrate_from(const ExpPoly& f, const Rational& a);
Constant eval_at(const ExpPoly& f, const Rational& q);

/// Parses the exponential-polynomial text syntax: sums and products of
/// rationals, the variable, e, exp(linear), parenthesized groups, integer
/// powers (rational powers for e) and division by nonzero constants.
ExpPoly parse_exppoly(std::string_view text, std::string_view var = "x");
/// Parses an expression that must evaluate to a constant.
Constant parse_constant(std::string_view text);

}  // namespace stieltjes
