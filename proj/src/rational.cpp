#include "stieltjes/rational.hpp"

#include <cctype>

#include "stieltjes/error.hpp"

namespace stieltjes {

namespace {

bool is_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  while (!body.empty() && std::isspace(static_cast<unsigned char>(body.front()))) body.remove_prefix(1);
  while (!body.empty() && std::isspace(static_cast<unsigned char>(body.back()))) body.remove_suffix(1);
  std::string_view digits = body;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
  const auto slash = digits.find('/');
  const bool ok = slash == std::string_view::npos
                      ? is_digits(digits)
                      : is_digits(digits.substr(0, slash)) && is_digits(digits.substr(slash + 1));
  if (!ok) throw ParseError("invalid rational literal '" + std::string(text) + "'");
  std::string literal(body);
  if (literal.front() == '+') literal.erase(0, 1);
  Rational q;
  q.set_str(literal, 10);
  if (q.get_den() == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

std::string to_latex(const Rational& q) {
  if (is_integer(q)) return q.get_num().get_str();
  const Integer num = abs(q.get_num());
  std::string out = q < 0 ? "-" : "";
  return out + "\\frac{" + num.get_str() + "}{" + q.get_den().get_str() + "}";
}

Rational pow(const Rational& q, unsigned n) {
  Rational r = 1;
  for (unsigned i = 0; i < n; ++i) r *= q;
  return r;
}

Integer lcm(const Integer& a, const Integer& b) {
  Integer r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

}  // namespace stieltjes
