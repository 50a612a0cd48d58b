#pragma once

#include <memory>
#include <string>
#include <vector>

#include "gaugeforge/jet.hpp"

namespace gaugeforge {

/// AST of the field expression language.
///
/// Grammar (EBNF, whitespace-insensitive, ASCII):
///   expr    = term { ("+" | "-") term } ;
///   term    = factor { ("*" | "/") factor } ;
///   factor  = "-" factor | power ;
///   power   = atom [ "^" exponent ] ;
///   exponent= [ "-" ] integer | "(" exponent ")" ;
///   atom    = number | "i" | "pi" | coordinate | call | "(" expr ")" ;
///   call    = ("sin" | "cos" | "exp" | "conj") "(" expr ")" ;
///   coordinate = "t" | "x" | "y" | "z" | "x0" | "x1" | "x2" | "x3" ;
///   number  = digits [ "." digits ] [ ("e"|"E") [sign] digits ] [ "i" ] ;
///
/// Precedence: ^ binds tightest, then unary minus, then * /, then + -.
/// All binary operators associate left except ^, whose exponent is an
/// integer literal.
class FieldExpr {
 public:
  enum class Kind { Literal, Coordinate, Neg, Add, Sub, Mul, Div, Pow, Call };
  enum class Func { Sin, Cos, Exp, Conj };

  Kind kind;
  Complex literal{};          // Kind::Literal
  int coordinate = 0;         // Kind::Coordinate, 0..3
  Func func = Func::Sin;      // Kind::Call
  int exponent = 0;           // Kind::Pow
  std::shared_ptr<const FieldExpr> lhs, rhs;

  bool structurally_equal(const FieldExpr& other) const;
};

using ExprPtr = std::shared_ptr<const FieldExpr>;

/// Parses a source string. Throws SyntaxError with the byte offset of the
/// offending position and the token set that was expected there.
ExprPtr parse(const std::string& src);

/// Canonical fully parenthesized rendering; parse(print(e)) reproduces
/// the AST node for node.
std::string print(const FieldExpr& e);
inline std::string print(const ExprPtr& e) { return print(*e); }

/// Evaluates the denoted function at `p` as a jet of the given order.
Jet eval_expr(const FieldExpr& e, const SpacetimePoint& p, int order);
inline Jet eval_expr(const ExprPtr& e, const SpacetimePoint& p, int order) {
  return eval_expr(*e, p, order);
}

}  // namespace gaugeforge
