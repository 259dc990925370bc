#include <cctype>
#include <string>
#include <string_view>

#include "stieltjes/error.hpp"
#include "stieltjes/exppoly.hpp"

namespace stieltjes {

namespace {

// Recursive-descent parser for the exponential-polynomial text syntax.
//
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/') unary)*
//   unary   := ('-' | '+') unary | power
//   power   := primary ('^' exponent)?
//   primary := integer | var | 'e' | 'exp' '(' expr ')' | '(' expr ')'
class Parser {
 public:
  Parser(std::string_view text, std::string_view var) : text_(text), var_(var) {}

  ExpPoly parse() {
    ExpPoly result = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return result;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("cannot parse '" + std::string(text_) + "' at offset " + std::to_string(pos_) + ": " + what);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  ExpPoly expr() {
    ExpPoly acc = term();
    for (;;) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  ExpPoly term() {
    ExpPoly acc = unary();
    for (;;) {
      if (accept('*')) {
        acc = acc * unary();
      } else if (accept('/')) {
        const ExpPoly divisor = unary();
        if (!divisor.is_constant()) fail("division by a non-constant expression");
        if (divisor.is_zero()) fail("division by zero");
        acc *= divisor.constant_value().inverse();
      } else {
        return acc;
      }
    }
  }

  ExpPoly unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Rational exponent() {
    bool negative = false;
    while (accept('-')) negative = !negative;
    Rational value;
    if (accept('(')) {
      const ExpPoly inner = expr();
      expect(')');
      if (!inner.is_constant() || !inner.constant_value().is_rational()) fail("exponent must be rational");
      value = inner.constant_value().rational_value();
    } else {
      value = integer();
    }
    return negative ? Rational(-value) : value;
  }

  ExpPoly power() {
    const ExpPoly base = primary();
    if (!accept('^')) return base;
    const Rational exp = exponent();
    // e^q for rational q
    if (base.is_constant() && !base.is_zero()) {
      const Constant c = base.constant_value();
      const ExpSum& num = c.numerator();
      if (c.denominator() == ExpSum(Rational(1)) && num.is_monomial() && num.leading().second == 1) {
        return ExpPoly(Constant::exp(num.leading().first * exp));
      }
    }
    if (!is_integer(exp) || exp < 0) fail("only nonnegative integer powers are supported here");
    if (exp.get_num() > 64) fail("exponent too large");
    ExpPoly out(1);
    for (long i = 0; i < exp.get_num().get_si(); ++i) out = out * base;
    return out;
  }

  Rational integer() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    return Rational(Integer(std::string(text_.substr(start, pos_ - start))));
  }

  std::string_view identifier() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
    return text_.substr(start, pos_ - start);
  }

  ExpPoly primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) return ExpPoly(integer());
    if (accept('(')) {
      ExpPoly inner = expr();
      expect(')');
      return inner;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      const std::string_view name = identifier();
      if (name == var_) return ExpPoly::x();
      if (name == "e") return ExpPoly(Constant::exp(Rational(1)));
      if (name == "exp") {
        expect('(');
        const ExpPoly arg = expr();
        expect(')');
        return exp_of_linear(arg);
      }
      pos_ = start;
      fail("unknown identifier '" + std::string(name) + "'");
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  ExpPoly exp_of_linear(const ExpPoly& arg) {
    Rational slope = 0;
    Rational offset = 0;
    for (const auto& [m, c] : arg.monomials()) {
      if (m.freq != 0 || m.degree > 1 || !c.is_rational()) fail("exp() argument must be linear with rational coefficients");
      (m.degree == 1 ? slope : offset) = c.rational_value();
    }
    return ExpPoly::monomial(Constant::exp(offset), Monomial{slope, 0});
  }

  std::string_view text_;
  std::string_view var_;
  std::size_t pos_ = 0;
};

}  // namespace

ExpPoly parse_exppoly(std::string_view text, std::string_view var) { return Parser(text, var).parse(); }

Constant parse_constant(std::string_view text) {
  const ExpPoly value = parse_exppoly(text);
  if (!value.is_constant()) throw ParseError("expected a constant, got '" + std::string(text) + "'");
  return value.constant_value();
}

}  // namespace stieltjes
