#include "blexpand/dsl/parser.hpp"

#include <algorithm>
#include <cctype>
#include <string>

namespace blexpand::dsl {

namespace {

enum class Tok { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, Comma, End };

struct Token {
  Tok kind;
  std::string text;
  SourceSpan span;
};

class Lexer {
 public:
  Lexer(std::string_view text, SourceSpan origin) : text_(text), line_(origin.line), col_(origin.column) {}

  Token next() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) advance();
    SourceSpan at{line_, col_};
    if (pos_ >= text_.size()) return {Tok::End, "", at};
    char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)) || (c == '.' && pos_ + 1 < text_.size() &&
                                                        std::isdigit(static_cast<unsigned char>(text_[pos_ + 1])))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.'))
        advance();
      if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
        std::size_t look = pos_ + 1;
        if (look < text_.size() && (text_[look] == '+' || text_[look] == '-')) ++look;
        if (look < text_.size() && std::isdigit(static_cast<unsigned char>(text_[look]))) {
          while (pos_ < look) advance();
          while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) advance();
        }
      }
      return {Tok::Number, std::string(text_.substr(start, pos_ - start)), at};
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        advance();
      return {Tok::Ident, std::string(text_.substr(start, pos_ - start)), at};
    }
    advance();
    switch (c) {
      case '+': return {Tok::Plus, "+", at};
      case '-': return {Tok::Minus, "-", at};
      case '*': return {Tok::Star, "*", at};
      case '/': return {Tok::Slash, "/", at};
      case '^': return {Tok::Caret, "^", at};
      case '(': return {Tok::LParen, "(", at};
      case ')': return {Tok::RParen, ")", at};
      case ',': return {Tok::Comma, ",", at};
      default: break;
    }
    throw ParseError(ErrorCode::Parse, at, std::string("unexpected character '") + c + "'");
  }

 private:
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_, col_;
};

class Parser {
 public:
  Parser(std::string_view text, SourceSpan origin) : lex_(text, origin) { cur_ = lex_.next(); }

  ExprPtr parseAll() {
    ExprPtr e = expr();
    if (cur_.kind != Tok::End) fail("unexpected '" + cur_.text + "' after expression");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(ErrorCode::Parse, cur_.span, msg); }

  Token take() {
    Token t = cur_;
    cur_ = lex_.next();
    return t;
  }

  void expect(Tok kind, const char* what) {
    if (cur_.kind != kind) fail(std::string("expected ") + what + (cur_.kind == Tok::End ? " at end of input" : ", found '" + cur_.text + "'"));
    take();
  }

  ExprPtr expr() {
    ExprPtr left = term();
    while (cur_.kind == Tok::Plus || cur_.kind == Tok::Minus) {
      Token op = take();
      ExprPtr right = term();
      left = makeNode(op.kind == Tok::Plus ? Expr::Kind::Add : Expr::Kind::Sub, {left, right}, op.span);
    }
    return left;
  }

  ExprPtr term() {
    ExprPtr left = unary();
    while (cur_.kind == Tok::Star || cur_.kind == Tok::Slash) {
      Token op = take();
      ExprPtr right = unary();
      if (op.kind == Tok::Slash && left->kind == Expr::Kind::Number && right->kind == Expr::Kind::Number) {
        if (sgn(right->number) == 0) throw ParseError(ErrorCode::Parse, op.span, "division by zero");
        left = makeNumber(left->number / right->number, left->span);
        continue;
      }
      left = makeNode(op.kind == Tok::Star ? Expr::Kind::Mul : Expr::Kind::Div, {left, right}, op.span);
    }
    return left;
  }

  ExprPtr unary() {
    if (cur_.kind == Tok::Minus) {
      Token op = take();
      return makeNode(Expr::Kind::Neg, {unary()}, op.span);
    }
    if (cur_.kind == Tok::Plus) {
      take();
      return unary();
    }
    return power();
  }

  ExprPtr power() {
    ExprPtr base = atom();
    if (cur_.kind != Tok::Caret) return base;
    Token caret = take();
    return makePow(base, exponent(), caret.span);
  }

  Rational integerLiteral() {
    if (cur_.kind != Tok::Number) fail("expected an integer exponent");
    Token t = take();
    bool digits = std::all_of(t.text.begin(), t.text.end(), [](char c) { return c >= '0' && c <= '9'; });
    if (!digits) throw ParseError(ErrorCode::Parse, t.span, "exponent literal must be an integer or (p/q)");
    Rational v = parseRational(t.text);
    if (v > 64) throw ParseError(ErrorCode::Parse, t.span, "exponent literal larger than 64");
    return v;
  }

  Rational exponent() {
    auto sign = [&]() {
      if (cur_.kind == Tok::Minus) {
        take();
        return -1;
      }
      if (cur_.kind == Tok::Plus) take();
      return 1;
    };
    if (cur_.kind == Tok::LParen) {
      take();
      int s = sign();
      Rational v = integerLiteral();
      if (cur_.kind == Tok::Slash) {
        Token slash = take();
        Rational d = integerLiteral();
        if (sgn(d) == 0) throw ParseError(ErrorCode::Parse, slash.span, "zero denominator in exponent");
        v /= d;
      }
      expect(Tok::RParen, "')' closing the exponent");
      return s * v;
    }
    int s = sign();
    return s * integerLiteral();
  }

  ExprPtr atom() {
    if (cur_.kind == Tok::Number) {
      Token t = take();
      try {
        return makeNumber(parseRational(t.text), t.span);
      } catch (const Error&) {
        throw ParseError(ErrorCode::Parse, t.span, "malformed number '" + t.text + "'");
      }
    }
    if (cur_.kind == Tok::Ident) {
      Token t = take();
      if (cur_.kind != Tok::LParen) return makeIdentifier(t.text, t.span);
      take();
      std::vector<ExprPtr> args{expr()};
      while (cur_.kind == Tok::Comma) {
        take();
        args.push_back(expr());
      }
      expect(Tok::RParen, "')' closing the argument list");
      return makeCall(t.text, std::move(args), t.span);
    }
    if (cur_.kind == Tok::LParen) {
      Token open = take();
      std::vector<ExprPtr> items{expr()};
      while (cur_.kind == Tok::Comma) {
        take();
        items.push_back(expr());
      }
      expect(Tok::RParen, "')'");
      if (items.size() == 1) return items[0];
      return makeNode(Expr::Kind::Tuple, std::move(items), open.span);
    }
    if (cur_.kind == Tok::End) fail("unexpected end of expression");
    fail("unexpected '" + cur_.text + "'");
  }

  Lexer lex_;
  Token cur_;
};

}  // namespace

ExprPtr parseExpression(std::string_view text, SourceSpan origin) { return Parser(text, origin).parseAll(); }

std::vector<ExprPtr> parseExpressionList(std::string_view text, SourceSpan origin) {
  std::vector<ExprPtr> out;
  int depth = 0;
  std::size_t start = 0;
  SourceSpan pieceOrigin = origin;
  SourceSpan at = origin;
  for (std::size_t k = 0; k <= text.size(); ++k) {
    char c = k < text.size() ? text[k] : ',';
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      std::string_view piece = text.substr(start, k - start);
      if (piece.find_first_not_of(" \t") == std::string_view::npos)
        throw ParseError(ErrorCode::Parse, pieceOrigin, "empty list item");
      out.push_back(parseExpression(piece, pieceOrigin));
      start = k + 1;
      pieceOrigin = {at.line, at.column + 1};
    }
    if (k < text.size()) {
      if (c == '\n') {
        ++at.line;
        at.column = 1;
      } else {
        ++at.column;
      }
    }
  }
  return out;
}

}  // namespace blexpand::dsl
