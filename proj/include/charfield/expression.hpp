// Recursive-descent parser for cyclotomic expressions:
//
//   expr     := term (('+' | '-') term)*
//   term     := factor ('*' factor)*
//   factor   := atom ('^' integer)?
//   atom     := rational | 'z(' integer ')' | '(' expr ')'
//   rational := integer ('/' positive-integer)?
//
// Integers may carry a leading '-'.  z(n) is exp(2*pi*i/n).  Whitespace is
// ignored between tokens.
#pragma once

#include "charfield/cyclotomic.hpp"

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>

namespace charfield {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

namespace detail {

class ExpressionParser {
 public:
  explicit ExpressionParser(std::string_view text) : text_(text) {}

  Cyclotomic parse() {
    Cyclotomic value = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return value;
  }

 private:
  Cyclotomic expr() {
    Cyclotomic value = term();
    for (;;) {
      skip_space();
      if (accept('+'))
        value += term();
      else if (accept('-'))
        value -= term();
      else
        return value;
    }
  }

  Cyclotomic term() {
    Cyclotomic value = factor();
    for (;;) {
      skip_space();
      if (!accept('*')) return value;
      value *= factor();
    }
  }

  Cyclotomic factor() {
    Cyclotomic base = atom();
    skip_space();
    if (!accept('^')) return base;
    const std::size_t at = pos_;
    const Integer e = integer();
    if (!e.fits_slong_p()) fail("exponent out of range", at);
    if (e < 0 && base.is_zero()) fail("zero raised to a negative power", at);
    return base.pow(e.get_si());
  }

  Cyclotomic atom() {
    skip_space();
    if (accept('(')) {
      Cyclotomic inner = expr();
      skip_space();
      expect(')');
      return inner;
    }
    if (accept('z')) {
      skip_space();
      expect('(');
      const std::size_t at = pos_;
      const Integer n = integer();
      if (n < 1 || !n.fits_slong_p()) fail("root-of-unity order must be a positive integer", at);
      skip_space();
      expect(')');
      return Cyclotomic::zeta(n.get_si());
    }
    const Integer num = integer();
    skip_space();
    if (!accept('/')) return Cyclotomic(Rational(num));
    const std::size_t at = pos_;
    const Integer den = integer();
    if (den <= 0) fail("denominator must be a positive integer", at);
    return Cyclotomic(make_rational(num, den));
  }

  Integer integer() {
    skip_space();
    const std::size_t start = pos_;
    if (pos_ < text_.size() && text_[pos_] == '-') ++pos_;
    const std::size_t digits = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == digits) fail("expected an integer", start);
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  [[noreturn]] void fail(const std::string& what) const { fail(what, pos_); }
  [[noreturn]] static void fail(const std::string& what, std::size_t at) { throw ParseError(what, at); }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline Cyclotomic parse_expression(std::string_view text) { return detail::ExpressionParser(text).parse(); }

}  // namespace charfield
