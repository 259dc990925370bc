#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "stieltjes/exppoly.hpp"

namespace stieltjes {

/// Element of F (x) F: a finite sum  sum_i f_i(x) * g_i(xi).
///
/// The second factor is expanded into monomials xi^n e^(l xi) with the
/// coefficient pushed into the first factor, so pairs with equal second
/// factor are merged and the representation is canonical.
class BivariateExpPoly {
 public:
  using Terms = std::map<Monomial, ExpPoly>;  // xi-monomial -> x-factor

  BivariateExpPoly() = default;
  static BivariateExpPoly tensor(const ExpPoly& f, const ExpPoly& g);
  static BivariateExpPoly from_pairs(const std::vector<std::pair<ExpPoly, ExpPoly>>& pairs);

  const Terms& terms() const { return terms_; }
  /// (f, g) pairs with g a monic monomial.
  std::vector<std::pair<ExpPoly, ExpPoly>> pairs() const;
  bool is_zero() const { return terms_.empty(); }

  BivariateExpPoly& operator+=(const BivariateExpPoly& other);
  BivariateExpPoly& operator-=(const BivariateExpPoly& other);
  friend BivariateExpPoly operator+(BivariateExpPoly a, const BivariateExpPoly& b) { return a += b; }
  friend BivariateExpPoly operator-(BivariateExpPoly a, const BivariateExpPoly& b) { return a -= b; }
  BivariateExpPoly operator-() const;
  friend bool operator==(const BivariateExpPoly& a, const BivariateExpPoly& b) { return a.terms_ == b.terms_; }

  /// Multiplies by 1 (x) g.
  BivariateExpPoly times_xi(const ExpPoly& g) const;

  BivariateExpPoly derive_x() const;
  BivariateExpPoly derive_xi() const;
  /// Integral in x from a, applied to every first factor.
  BivariateExpPoly integrate_x(const Rational& a) const;
  /// Integral in xi from a, applied to every second factor.
  BivariateExpPoly integrate_xi(const Rational& a) const;

  Constant eval(const Rational& x, const Rational& xi) const;

  /// Substitutes xi := x, giving a univariate function of x.
  ExpPoly diagonal() const;
  /// Substitutes xi := q.
  ExpPoly at_xi(const Rational& q) const;

  /// "f1(x)*(g1(xi)) + ..." in the ExpPoly text syntax with variables x, xi.
  std::string to_string() const;
  std::string to_latex() const;

 private:
  void add(const Monomial& m, const ExpPoly& f);

  Terms terms_;
};

}  // namespace stieltjes
