#pragma once

#include <map>
#include <string>
#include <vector>

#include "stieltjes/exppoly.hpp"

namespace stieltjes {

/// Key of an integral term  f * Int_a * g, with g a monic monomial.
struct IntegralKey {
  Rational basepoint;
  Monomial right;
};

/// Key of a local boundary term  f * [alpha] * D^order.
struct LocalKey {
  Rational point;
  unsigned order = 0;
};

/// Key of a global boundary term  f * [alpha] * Int_a * g.
struct GlobalKey {
  Rational point;
  Rational basepoint;
  Monomial right;
};

bool operator<(const IntegralKey& a, const IntegralKey& b);
bool operator<(const LocalKey& a, const LocalKey& b);
bool operator<(const GlobalKey& a, const GlobalKey& b);
bool operator==(const IntegralKey& a, const IntegralKey& b);
bool operator==(const LocalKey& a, const LocalKey& b);
bool operator==(const GlobalKey& a, const GlobalKey& b);

/// Element of the integro-differential operator ring over exponential
/// polynomials, carrying both evaluations [alpha] and integrals Int_a
/// initialized at arbitrary rational points:
///
///   sum f_i D^i  +  sum f Int_a g  +  sum f [alpha] D^i  +  sum f [alpha] Int_a g
///
/// Terms live in ordered maps keyed by (basepoint, point, order, right
/// monomial); entries with equal keys are merged and zero entries dropped, so
/// two operators with the same parts compare equal. The standard form uses a
/// single integral basepoint, the equitable form has no global terms; both
/// are unique, and `equivalent` compares operators through the equitable one.
class Operator {
 public:
  Operator() = default;

  static Operator identity();
  static Operator derivation(unsigned order = 1);
  static Operator multiplication(const ExpPoly& f);
  static Operator integral(const Rational& basepoint);
  static Operator evaluation(const Rational& point);

  static Operator diff_term(const ExpPoly& f, unsigned order);
  static Operator integral_term(const Rational& basepoint, const ExpPoly& left, const ExpPoly& right);
  static Operator local_term(const ExpPoly& left, const Rational& point, unsigned order);
  static Operator global_term(const ExpPoly& left, const Rational& point, const Rational& basepoint,
                              const ExpPoly& right);

  const std::map<unsigned, ExpPoly>& diff_part() const { return diff_; }
  const std::map<IntegralKey, ExpPoly>& integral_part() const { return integral_; }
  const std::map<LocalKey, ExpPoly>& local_boundary() const { return local_; }
  const std::map<GlobalKey, ExpPoly>& global_boundary() const { return global_; }

  bool is_zero() const;
  bool is_differential() const { return integral_.empty() && local_.empty() && global_.empty(); }
  bool is_equitable() const { return global_.empty(); }
  /// Highest order in the differential part, 0 if none.
  unsigned order() const;
  /// All integral basepoints and all evaluation points, sorted.
  std::vector<Rational> points() const;

  Operator& operator+=(const Operator& other);
  Operator& operator-=(const Operator& other);
  friend Operator operator+(Operator a, const Operator& b) { return a += b; }
  friend Operator operator-(Operator a, const Operator& b) { return a -= b; }
  Operator operator-() const;
  /// Left multiplication by a constant.
  friend Operator operator*(const Constant& c, const Operator& u);
  friend Operator operator*(const Operator& u, const Operator& v);
  friend bool operator==(const Operator& a, const Operator& b);

  std::string to_string() const;
  std::string to_latex() const;

 private:
  void add_diff(unsigned order, const ExpPoly& f);
  void add_integral(const Rational& basepoint, const ExpPoly& left, const ExpPoly& right);
  void add_local(const ExpPoly& left, const Rational& point, unsigned order);
  void add_global(const ExpPoly& left, const Rational& point, const Rational& basepoint, const ExpPoly& right);

  friend Operator lmul_function(const ExpPoly& f, const Operator& v);
  friend Operator lmul_derivation(const Operator& v);
  friend Operator lmul_evaluation(const Rational& point, const Operator& v);
  friend Operator lmul_integral(const Rational& basepoint, const Operator& v);
  friend Operator to_equitable(const Operator& u);
  friend Operator to_standard(const Operator& u, const Rational& basepoint);

  std::map<unsigned, ExpPoly> diff_;
  std::map<IntegralKey, ExpPoly> integral_;
  std::map<LocalKey, ExpPoly> local_;
  std::map<GlobalKey, ExpPoly> global_;
};

Operator op_add(const Operator& u, const Operator& v);
Operator op_mul(const Operator& u, const Operator& v);
/// u^k by repeated multiplication.
Operator op_pow(const Operator& u, unsigned k);

/// Natural action of the operator on a function.
ExpPoly apply(const Operator& u, const ExpPoly& h);

/// Rewrites every global term f [alpha] Int_a g as f Int_a g - f Int_alpha g.
Operator to_equitable(const Operator& u);
/// Rewrites every Int_a with a != basepoint as (1 - [a]) Int_basepoint.
Operator to_standard(const Operator& u, const Rational& basepoint);
/// Operator equality independent of the chosen normal form.
bool equivalent(const Operator& u, const Operator& v);

}  // namespace stieltjes
