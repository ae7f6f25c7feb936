#include "blexpand/dsl/ast.hpp"

namespace blexpand::dsl {

ExprPtr makeNumber(Rational value, SourceSpan span) {
  auto e = std::make_shared<Expr>();
  e->kind = Expr::Kind::Number;
  e->number = std::move(value);
  e->span = span;
  return e;
}

ExprPtr makeIdentifier(std::string name, SourceSpan span) {
  auto e = std::make_shared<Expr>();
  e->kind = Expr::Kind::Identifier;
  e->name = std::move(name);
  e->span = span;
  return e;
}

ExprPtr makeNode(Expr::Kind kind, std::vector<ExprPtr> args, SourceSpan span) {
  auto e = std::make_shared<Expr>();
  e->kind = kind;
  e->args = std::move(args);
  e->span = span;
  return e;
}

ExprPtr makePow(ExprPtr base, Rational exponent, SourceSpan span) {
  auto e = std::make_shared<Expr>();
  e->kind = Expr::Kind::Pow;
  e->exponent = std::move(exponent);
  e->args = {std::move(base)};
  e->span = span;
  return e;
}

ExprPtr makeCall(std::string name, std::vector<ExprPtr> args, SourceSpan span) {
  auto e = std::make_shared<Expr>();
  e->kind = Expr::Kind::Call;
  e->name = std::move(name);
  e->args = std::move(args);
  e->span = span;
  return e;
}

bool structurallyEqual(const Expr& a, const Expr& b) {
  if (a.kind != b.kind || a.args.size() != b.args.size()) return false;
  switch (a.kind) {
    case Expr::Kind::Number:
      if (a.number != b.number) return false;
      break;
    case Expr::Kind::Identifier:
    case Expr::Kind::Call:
      if (a.name != b.name) return false;
      break;
    case Expr::Kind::Pow:
      if (a.exponent != b.exponent) return false;
      break;
    default:
      break;
  }
  for (std::size_t k = 0; k < a.args.size(); ++k)
    if (!structurallyEqual(*a.args[k], *b.args[k])) return false;
  return true;
}

namespace {

int precedence(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Add:
    case Expr::Kind::Sub: return 1;
    case Expr::Kind::Mul:
    case Expr::Kind::Div: return 2;
    case Expr::Kind::Neg: return 3;
    case Expr::Kind::Pow: return 4;
    default: return 5;
  }
}

std::string wrap(const Expr& e, bool parens) {
  std::string s = printExpr(e);
  return parens ? "(" + s + ")" : s;
}

std::string exponentText(const Rational& p) {
  if (isInteger(p)) return p.get_str();
  return "(" + p.get_str() + ")";
}

}  // namespace

std::string printExpr(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Number:
      return isInteger(e.number) ? e.number.get_str() : "(" + e.number.get_str() + ")";
    case Expr::Kind::Identifier:
      return e.name;
    case Expr::Kind::Neg:
      return "-" + wrap(*e.args[0], precedence(*e.args[0]) < 3);
    case Expr::Kind::Add:
    case Expr::Kind::Sub:
    case Expr::Kind::Mul:
    case Expr::Kind::Div: {
      int p = precedence(e);
      const char* op = e.kind == Expr::Kind::Add   ? " + "
                       : e.kind == Expr::Kind::Sub ? " - "
                       : e.kind == Expr::Kind::Mul ? "*"
                                                   : "/";
      return wrap(*e.args[0], precedence(*e.args[0]) < p) + op + wrap(*e.args[1], precedence(*e.args[1]) <= p);
    }
    case Expr::Kind::Pow:
      return wrap(*e.args[0], precedence(*e.args[0]) < 5) + "^" + exponentText(e.exponent);
    case Expr::Kind::Call:
    case Expr::Kind::Tuple: {
      std::string s = e.kind == Expr::Kind::Call ? e.name + "(" : "(";
      for (std::size_t k = 0; k < e.args.size(); ++k) s += (k ? ", " : "") + printExpr(*e.args[k]);
      return s + ")";
    }
  }
  return "";
}

}  // namespace blexpand::dsl
