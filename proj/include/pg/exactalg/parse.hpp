#pragma once

#include <cctype>
#include <string>
#include <string_view>

#include "pg/exactalg/polynomial.hpp"

namespace pg {

namespace detail {

// expr := term (('+'|'-') term)* ; term := unary ('*' unary | '/' number)* ;
// unary := '-' unary | power ; power := atom ('^' int)? ; atom := number | name | '(' expr ')'
class PolyParser {
 public:
  PolyParser(std::string_view src, Vars vars) : src_(src), vars_(std::move(vars)) {}

  QPoly parse() {
    auto p = expr();
    skip_ws();
    if (pos_ != src_.size()) fail("unexpected trailing input");
    return p;
  }

 private:
  QPoly expr() {
    auto acc = term();
    for (;;) {
      skip_ws();
      if (accept('+')) acc += term();
      else if (accept('-')) acc -= term();
      else return acc;
    }
  }

  QPoly term() {
    auto acc = unary();
    for (;;) {
      skip_ws();
      if (accept('*')) {
        acc *= unary();
      } else if (accept('/')) {
        auto d = unary();
        if (!d.is_constant() || d.is_zero()) fail("division only by nonzero constants");
        acc = acc * d.constant_term().inverse();
      } else {
        return acc;
      }
    }
  }

  QPoly unary() {
    skip_ws();
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  QPoly power() {
    auto base = atom();
    skip_ws();
    if (accept('^') || accept2("**")) {
      skip_ws();
      auto e = integer_literal();
      return base.pow(static_cast<unsigned>(std::stoul(e)));
    }
    return base;
  }

  QPoly atom() {
    skip_ws();
    if (accept('(')) {
      auto p = expr();
      skip_ws();
      if (!accept(')')) fail("expected ')'");
      return p;
    }
    if (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
      return QPoly::constant(vars_, Rational(Integer(integer_literal(), 10)));
    }
    std::string name;
    while (pos_ < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
      name += src_[pos_++];
    if (name.empty()) fail("expected a number, variable or '('");
    return QPoly::variable(vars_, name);
  }

  std::string integer_literal() {
    std::string digits;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) digits += src_[pos_++];
    if (digits.empty()) fail("expected an integer");
    return digits;
  }

  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    if (pos_ < src_.size() && src_[pos_] == c) {
      if (c == '*' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '*') return false;
      ++pos_;
      return true;
    }
    return false;
  }
  bool accept2(std::string_view s) {
    if (src_.substr(pos_, s.size()) == s) {
      pos_ += s.size();
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw InputError("polynomial parse error at " + std::to_string(pos_) + ": " + what + " in '" +
                     std::string(src_) + "'");
  }

  std::string_view src_;
  Vars vars_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses an expression such as "540*u0^3 - 381*u0^2*u1 + 3/4*u2".
inline QPoly parse_poly(std::string_view text, const Vars& vars) {
  return detail::PolyParser(text, vars).parse();
}

}  // namespace pg
