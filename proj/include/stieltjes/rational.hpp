#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace stieltjes {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "p", "-p" or "p/q" (no whitespace inside the literal).
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);

/// LaTeX form: integers plain, fractions as \frac{p}{q} with the sign outside.
std::string to_latex(const Rational& q);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

/// q^n for n >= 0.
Rational pow(const Rational& q, unsigned n);

Integer lcm(const Integer& a, const Integer& b);

}  // namespace stieltjes
