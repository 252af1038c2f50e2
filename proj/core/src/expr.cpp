#include "collatz/expr.hpp"

#include <cctype>

namespace collatz {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Nat parse() {
    Nat value = expr();
    skip_ws();
    if (pos_ != text_.size())
      throw ExprError("unexpected character at position " +
                      std::to_string(pos_));
    return value;
  }

 private:
  Nat expr() {
    Nat value = term();
    for (;;) {
      skip_ws();
      if (consume('+')) {
        value += term();
      } else if (consume('-')) {
        Nat rhs = term();
        if (value < rhs) throw ExprError("subtraction below zero");
        value -= rhs;
      } else {
        return value;
      }
    }
  }

  Nat term() {
    Nat base = atom();
    skip_ws();
    if (!consume('^')) return base;
    Nat exponent = term();
    if (!exponent.fits_u64()) throw ExprError("exponent too large");
    return Nat::pow(base, exponent.to_u64());
  }

  Nat atom() {
    skip_ws();
    if (consume('(')) {
      Nat value = expr();
      skip_ws();
      if (!consume(')')) throw ExprError("missing ')'");
      return value;
    }
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    if (pos_ == start)
      throw ExprError("expected a number at position " + std::to_string(start));
    return Nat::from_decimal(text_.substr(start, pos_ - start));
  }

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool consume(char c) {
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Nat eval_expr(std::string_view text) { return Parser(text).parse(); }

}  // namespace collatz
