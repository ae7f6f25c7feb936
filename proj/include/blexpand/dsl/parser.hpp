#pragma once

#include <string_view>
#include <vector>

#include "blexpand/dsl/ast.hpp"

namespace blexpand::dsl {

// Expression grammar (LL(1)):
//   expr     := term (('+' | '-') term)*
//   term     := unary (('*' | '/') unary)*
//   unary    := ('-' | '+') unary | power
//   power    := atom ('^' exponent)?
//   exponent := ['-'|'+'] INT | '(' ['-'|'+'] INT ['/' INT] ')'
// Exponent literals are at most 64.
//   atom     := NUMBER | IDENT | IDENT '(' expr (',' expr)* ')'
//             | '(' expr ')' | '(' expr (',' expr)+ ')'
// NUMBER '/' NUMBER folds into one exact literal.
// `origin` is the position of the first character of `text`.
ExprPtr parseExpression(std::string_view text, SourceSpan origin = {1, 1});

// Splits on commas outside parentheses, then parses each piece.
std::vector<ExprPtr> parseExpressionList(std::string_view text, SourceSpan origin = {1, 1});

}  // namespace blexpand::dsl
