#pragma once

#include <memory>
#include <string>
#include <vector>

#include "blexpand/error.hpp"
#include "blexpand/rational.hpp"

namespace blexpand::dsl {

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
  enum class Kind { Number, Identifier, Neg, Add, Sub, Mul, Div, Pow, Call, Tuple };
  Kind kind = Kind::Number;
  Rational number;    // Number
  std::string name;   // Identifier, Call
  Rational exponent;  // Pow
  std::vector<ExprPtr> args;
  SourceSpan span;
};

ExprPtr makeNumber(Rational value, SourceSpan span = {});
ExprPtr makeIdentifier(std::string name, SourceSpan span = {});
ExprPtr makeNode(Expr::Kind kind, std::vector<ExprPtr> args, SourceSpan span = {});
ExprPtr makePow(ExprPtr base, Rational exponent, SourceSpan span = {});
ExprPtr makeCall(std::string name, std::vector<ExprPtr> args, SourceSpan span = {});

// Ignores source spans.
bool structurallyEqual(const Expr& a, const Expr& b);

// Canonical text: minimal parentheses, non-integer literals as (p/q).
// Parsing the result gives a structurally equal tree.
std::string printExpr(const Expr& e);

}  // namespace blexpand::dsl
