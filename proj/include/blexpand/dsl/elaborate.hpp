#pragma once

#include <map>
#include <string>
#include <variant>

#include "blexpand/dsl/ast.hpp"
#include "blexpand/symbol_poly.hpp"

namespace blexpand::dsl {

// Constant value: exact rational, exact rational multiple of pi, or a
// double when no exact form is known (e.g. sin(1)).
class Scalar {
 public:
  enum class Kind { Exact, PiMultiple, Real };

  Scalar() = default;
  static Scalar exact(Rational q);
  static Scalar piTimes(Rational q);
  static Scalar real(double d);

  Kind kind() const { return kind_; }
  bool isExact() const { return kind_ == Kind::Exact; }
  const Rational& rational() const { return q_; }  // Exact / PiMultiple coefficient
  double toDouble() const;
  // Exact rational; doubles convert through their binary value.
  Rational toRational() const;
  std::string str() const;

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar operator-() const;
  friend bool operator==(const Scalar& a, const Scalar& b);

 private:
  Kind kind_ = Kind::Exact;
  Rational q_{0};
  double d_ = 0;
};

Scalar sinScalar(const Scalar& x);
Scalar cosScalar(const Scalar& x);
Scalar sqrtScalar(const Scalar& x);
Scalar powScalar(const Scalar& x, const Rational& p);

// Names visible to an expression. Scalars are constants (parameters and
// boundary sample quantities); symbols are polynomial variables. `eps`
// and `i` are built in for symbolic evaluation, `pi` always.
struct Environment {
  int nvars = 0;
  std::map<std::string, Scalar> scalars;
  std::map<std::string, SymbolPoly> symbols;
  bool allowEps = true;
};

using Value = std::variant<Scalar, SymbolPoly>;

Value evaluate(const Expr& e, const Environment& env);
Scalar evaluateScalar(const Expr& e, const Environment& env);
SymbolPoly evaluateSymbol(const Expr& e, const Environment& env);
SymbolPoly toSymbol(const Value& v, int nvars);

}  // namespace blexpand::dsl
