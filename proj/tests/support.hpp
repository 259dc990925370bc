#pragma once

#include <random>
#include <string>
#include <vector>

#include "stieltjes/boundary.hpp"
#include "stieltjes/exppoly.hpp"
#include "stieltjes/operator.hpp"
#include "stieltjes/rational.hpp"

namespace testing {

using namespace stieltjes;

inline Rational q(const std::string& s) { return parse_rational(s); }
inline ExpPoly P(const std::string& s) { return parse_exppoly(s); }
inline Constant C(const std::string& s) { return parse_constant(s); }
inline ExpPoly X() { return ExpPoly::x(); }
inline Operator D(unsigned k = 1) { return Operator::derivation(k); }
inline Operator M(const ExpPoly& f) { return Operator::multiplication(f); }
inline Operator M(const std::string& f) { return Operator::multiplication(P(f)); }
inline Operator Int(const std::string& a) { return Operator::integral(q(a)); }
inline Operator Ev(const std::string& a) { return Operator::evaluation(q(a)); }

inline std::vector<ExpPoly> standard_test_functions() {
  return {P("1"), P("x"), P("x^2"), P("exp(x)"), P("x*exp(-x)")};
}

class Random {
 public:
  explicit Random(unsigned seed) : rng_(seed) {}

  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  template <class T>
  const T& pick(const std::vector<T>& items) {
    return items[static_cast<std::size_t>(integer(0, static_cast<int>(items.size()) - 1))];
  }

  Rational rational(int range = 3, int max_den = 3) {
    Rational r(integer(-range, range), integer(1, max_den));
    r.canonicalize();
    return r;
  }

  Rational nonzero_rational(int range = 3, int max_den = 3) {
    Rational r;
    do r = rational(range, max_den);
    while (r == 0);
    return r;
  }

  Constant constant() {
    if (integer(0, 3) == 0) return Constant(nonzero_rational()) * Constant::exp(pick(exponents_));
    return Constant(rational());
  }

  ExpPoly exppoly(int max_terms = 2, unsigned max_degree = 2) {
    ExpPoly f;
    const int n = integer(1, max_terms);
    for (int i = 0; i < n; ++i) {
      const Monomial m{pick(freqs_), static_cast<unsigned>(integer(0, static_cast<int>(max_degree)))};
      f += ExpPoly::monomial(constant(), m);
    }
    return f;
  }

  Rational point() { return pick(points_); }

  Operator op(int max_terms = 3) {
    Operator u;
    const int n = integer(1, max_terms);
    for (int i = 0; i < n; ++i) {
      switch (integer(0, 3)) {
        case 0:
          u += Operator::diff_term(exppoly(), static_cast<unsigned>(integer(0, 2)));
          break;
        case 1:
          u += Operator::integral_term(point(), exppoly(), exppoly(1, 1));
          break;
        case 2:
          u += Operator::local_term(exppoly(), point(), static_cast<unsigned>(integer(0, 2)));
          break;
        default:
          u += Operator::global_term(exppoly(), point(), point(), exppoly(1, 1));
          break;
      }
    }
    return u;
  }

  std::mt19937& engine() { return rng_; }

 private:
  std::mt19937 rng_;
  std::vector<Rational> freqs_{Rational(0), Rational(0), Rational(1), Rational(-1), Rational(1, 2)};
  std::vector<Rational> exponents_{Rational(1), Rational(-1), Rational(2)};
  std::vector<Rational> points_{Rational(0), Rational(1), Rational(-1), Rational(1, 2)};
};

/// Monic constant-coefficient operator with the given characteristic roots.
inline Operator from_roots(const std::vector<Rational>& roots) {
  Operator t = Operator::identity();
  for (const auto& r : roots) t = (D() - Constant(r) * Operator::identity()) * t;
  return t;
}

}  // namespace testing
