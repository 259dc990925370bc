#pragma once

#include <map>
#include <string>

#include "stieltjes/rational.hpp"

namespace stieltjes {

/// Element of the group algebra of (Q,+): a finite sum  sum_q c_q * e^q.
///
/// The symbols e^q are treated as linearly independent over Q, so zero
/// testing is exact. Zero coefficients are never stored.
class ExpSum {
 public:
  using Terms = std::map<Rational, Rational>;  // exponent -> coefficient

  ExpSum() = default;
  ExpSum(const Rational& c);  // NOLINT(google-explicit-constructor)
  static ExpSum monomial(const Rational& coeff, const Rational& exponent);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  /// Pure rational value (only the e^0 term).
  bool is_rational() const;

  /// Term with the largest exponent. Requires !is_zero().
  const std::pair<const Rational, Rational>& leading() const { return *terms_.rbegin(); }

  /// Multiplies by coeff * e^exponent.
  ExpSum times_monomial(const Rational& coeff, const Rational& exponent) const;

  ExpSum& operator+=(const ExpSum& other);
  ExpSum& operator-=(const ExpSum& other);
  friend ExpSum operator+(ExpSum a, const ExpSum& b) { return a += b; }
  friend ExpSum operator-(ExpSum a, const ExpSum& b) { return a -= b; }
  friend ExpSum operator*(const ExpSum& a, const ExpSum& b);
  ExpSum operator-() const;
  friend bool operator==(const ExpSum& a, const ExpSum& b) { return a.terms_ == b.terms_; }

  /// "4*exp(2) - 10*exp(1) + 6"
  std::string to_string() const;
  std::string to_latex() const;

 private:
  void add_term(const Rational& exponent, const Rational& coeff);

  Terms terms_;
};

/// Exact scalar: a quotient of two group-algebra elements, kept in lowest
/// terms with the denominator's leading term equal to 1 (exponent 0).
///
/// Canonical form makes equality structural.
class Constant {
 public:
  Constant() : den_(Rational(1)) {}
  Constant(const Rational& q);  // NOLINT(google-explicit-constructor)
  Constant(long q) : Constant(Rational(q)) {}  // NOLINT(google-explicit-constructor)
  Constant(const ExpSum& s);  // NOLINT(google-explicit-constructor)

  /// num / den; throws AlgebraError("zero divisor") when den is zero.
  static Constant fraction(const ExpSum& num, const ExpSum& den);
  /// The symbol e^q.
  static Constant exp(const Rational& q);

  const ExpSum& numerator() const { return num_; }
  const ExpSum& denominator() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_rational() const { return den_.is_rational() && num_.is_rational(); }
  /// Throws AlgebraError when the value involves e.
  Rational rational_value() const;

  Constant& operator+=(const Constant& other);
  Constant& operator-=(const Constant& other);
  Constant& operator*=(const Constant& other);
  Constant& operator/=(const Constant& other);
  friend Constant operator+(Constant a, const Constant& b) { return a += b; }
  friend Constant operator-(Constant a, const Constant& b) { return a -= b; }
  friend Constant operator*(Constant a, const Constant& b) { return a *= b; }
  friend Constant operator/(Constant a, const Constant& b) { return a /= b; }
  Constant operator-() const;
  Constant inverse() const;

  friend bool operator==(const Constant& a, const Constant& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  /// Text syntax understood by the expression parser, e.g. "(exp(1) + 1)/(1 - exp(-2))".
  /// `atomic` is set when the result can be used as a factor without parentheses.
  std::string to_string(bool* atomic = nullptr) const;
  std::string to_latex(bool* atomic = nullptr) const;

 private:
  Constant(ExpSum num, ExpSum den, bool normalize);
  void normalize();

  ExpSum num_;
  ExpSum den_;
};

}  // namespace stieltjes
