#pragma once

/// Big-integer expression evaluation for CLI inputs like
/// "10^142-10^6+1". Grammar:
///
///   expr := term (('+' | '-') term)*
///   term := atom ('^' term)?            (^ right-associative)
///   atom := decimal-literal | '(' expr ')'
///
/// '+' and '-' evaluate left to right; '^' binds tighter. Values are
/// naturals: subtraction below zero is an evaluation error. No
/// multiplication operator.

#include <stdexcept>
#include <string>
#include <string_view>

#include "collatz/nat.hpp"

namespace collatz {

struct ExprError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Nat eval_expr(std::string_view text);

}  // namespace collatz
