#pragma once

#include <memory>
#include <string>
#include <vector>

#include "swapalg/swap_fraction.hpp"

namespace swapalg {

// Abstract syntax for the expression language:
//   expr   := term (('+' | '-') term)*
//   term   := factor (('*' | '/') factor)*
//   factor := INT ('/' INT)? | p(ID,ID) | cr(ID,ID,ID,ID)
//           | det([IDs],[IDs]) | br(expr,expr) | '-' factor | '(' expr ')'
// Identifiers are validated against the active point set at parse time.
struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
  enum class Kind { Literal, Pair, Cross, Det, Bracket, Neg, Add, Sub, Mul, Div };
  Kind kind;
  Rat lit;                       // Literal
  std::vector<int> ids;          // Pair: l, r;  Cross: x, y, z, t (point indices)
  std::vector<int> xs, ys;       // Det
  ExprPtr a, b;                  // children (Neg uses a only)
};

ExprPtr parse_expr(const std::string& text, const PointSetPtr& ps);

// Canonical print with minimal parentheses; parse(print(e)) reproduces the
// printed string.
std::string print_expr(const ExprPtr& e, const PointSetPtr& ps);

// Bottom-up exact evaluation in the fraction field of Z(P).
SwapFraction eval_expr(const ExprPtr& e, const PointSetPtr& ps);

}  // namespace swapalg
