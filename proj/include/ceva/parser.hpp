#pragma once

// Recursive-descent parser for polynomial expressions over Q.
//
// Grammar (whitespace insensitive):
//   expr   := term (('+'|'-') term)*
//   term   := unary ('*' unary)*
//   unary  := '-' unary | power
//   power  := atom ('^' nat)*
//   atom   := number | identifier | '(' expr ')'
//   number := digits ('/' digits)?
//
// '^' binds tightest, then unary minus, '*', and '+'/'-'.  Identifiers must
// be variables of the target ring.  Every error carries the byte offset at
// which parsing failed.

#include <cctype>
#include <stdexcept>
#include <string>

#include "ceva/poly.hpp"
#include "ceva/rational.hpp"

namespace ceva {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, size_t pos)
      : std::runtime_error("parse error at position " + std::to_string(pos) + ": " + what),
        pos_(pos) {}
  size_t position() const { return pos_; }

 private:
  size_t pos_;
};

namespace detail {

class Parser {
 public:
  Parser(const std::string& src, RingPtr<RatField> ring)
      : src_(src), ring_(std::move(ring)) {}

  Poly<RatField> run() {
    Poly<RatField> p = expr();
    skip_ws();
    if (pos_ != src_.size()) throw ParseError("unexpected character", pos_);
    return p;
  }

 private:
  using P = Poly<RatField>;

  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < src_.size() ? src_[pos_] : '\0';
  }

  bool accept(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  P expr() {
    P acc = term();
    for (;;) {
      if (accept('+'))
        acc = acc + term();
      else if (accept('-'))
        acc = acc - term();
      else
        return acc;
    }
  }

  P term() {
    P acc = unary();
    while (accept('*')) acc = acc * unary();
    return acc;
  }

  P unary() {
    if (accept('-')) return -unary();
    return power();
  }

  P power() {
    P base = atom();
    while (accept('^')) {
      long e = nat();
      base = base.pow(e);
    }
    return base;
  }

  P atom() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      P inner = expr();
      if (!accept(')')) throw ParseError("expected ')'", pos_);
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return identifier();
    throw ParseError("expected number, variable, or '('", pos_);
  }

  long nat() {
    skip_ws();
    size_t start = pos_;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    if (pos_ == start) throw ParseError("expected integer", start);
    const std::string digits = src_.substr(start, pos_ - start);
    if (digits.size() > 9) throw ParseError("exponent too large", start);
    return std::stol(digits);
  }

  P number() {
    skip_ws();
    size_t start = pos_;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    std::string text = src_.substr(start, pos_ - start);
    if (pos_ < src_.size() && src_[pos_] == '/') {
      size_t save = pos_++;
      size_t dstart = pos_;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
      if (pos_ == dstart) throw ParseError("expected denominator", save + 1);
      std::string den = src_.substr(dstart, pos_ - dstart);
      if (Int(den.c_str()) == 0) throw ParseError("zero denominator", dstart);
      text += "/" + den;
    }
    return P::constant(ring_, rat_from_string(text));
  }

  P identifier() {
    skip_ws();
    size_t start = pos_;
    while (pos_ < src_.size() &&
           (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
      ++pos_;
    std::string name = src_.substr(start, pos_ - start);
    int idx = ring_->var_index(name);
    if (idx < 0) throw ParseError("unknown variable '" + name + "'", start);
    return P::variable(ring_, idx);
  }

  const std::string& src_;
  RingPtr<RatField> ring_;
  size_t pos_ = 0;
};

}  // namespace detail

inline Poly<RatField> parse_poly(const std::string& src, RingPtr<RatField> ring) {
  return detail::Parser(src, std::move(ring)).run();
}

}  // namespace ceva
