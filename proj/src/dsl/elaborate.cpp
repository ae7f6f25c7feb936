#include "blexpand/dsl/elaborate.hpp"

#include <cmath>
#include <sstream>

namespace blexpand::dsl {

namespace {

Rational reduceMod2(const Rational& q) {
  mpz_class num = q.get_num(), den = q.get_den();
  mpz_class twoDen = 2 * den;
  mpz_class r = num % twoDen;
  if (r < 0) r += twoDen;
  Rational out(r, den);
  out.canonicalize();
  return out;
}

// sin(q pi) when it is rational.
bool exactSinPi(const Rational& q, Rational& out) {
  Rational r = reduceMod2(q);
  mpz_class den = r.get_den();
  if (den == 1) {
    out = 0;
    return true;
  }
  if (den == 2) {
    out = r == makeRational(1, 2) ? 1 : -1;
    return true;
  }
  if (den == 6) {
    // 1/6, 5/6 -> 1/2; 7/6, 11/6 -> -1/2
    out = r < 1 ? makeRational(1, 2) : makeRational(-1, 2);
    return true;
  }
  return false;
}

[[noreturn]] void fail(const Expr& e, ErrorCode code, const std::string& msg) { throw ParseError(code, e.span, msg); }

bool isPureEpsMonomial(const SymbolPoly& p, Rational& power, CRat& coefficient) {
  if (p.terms().size() != 1) return false;
  const auto& [k, c] = *p.terms().begin();
  if (k.xdeg != 0) return false;
  for (int z : k.zdeg)
    if (z) return false;
  power = p.epsExponent(k);
  coefficient = c;
  return true;
}

}  // namespace

Scalar Scalar::exact(Rational q) {
  Scalar s;
  s.kind_ = Kind::Exact;
  q.canonicalize();
  s.q_ = std::move(q);
  return s;
}

Scalar Scalar::piTimes(Rational q) {
  if (sgn(q) == 0) return exact(0);
  Scalar s;
  s.kind_ = Kind::PiMultiple;
  q.canonicalize();
  s.q_ = std::move(q);
  return s;
}

Scalar Scalar::real(double d) {
  Scalar s;
  s.kind_ = Kind::Real;
  s.d_ = d;
  return s;
}

double Scalar::toDouble() const {
  switch (kind_) {
    case Kind::Exact: return q_.get_d();
    case Kind::PiMultiple: return q_.get_d() * M_PI;
    case Kind::Real: return d_;
  }
  return 0;
}

Rational Scalar::toRational() const { return kind_ == Kind::Exact ? q_ : rationalFromDouble(toDouble()); }

std::string Scalar::str() const {
  switch (kind_) {
    case Kind::Exact: return q_.get_str();
    case Kind::PiMultiple: return q_ == 1 ? "pi" : q_.get_str() + "*pi";
    case Kind::Real: {
      std::ostringstream os;
      os.precision(17);
      os << d_;
      return os.str();
    }
  }
  return "";
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  using K = Scalar::Kind;
  if (a.kind_ == K::Exact && b.kind_ == K::Exact) return Scalar::exact(a.q_ + b.q_);
  if (a.kind_ == K::PiMultiple && b.kind_ == K::PiMultiple) return Scalar::piTimes(a.q_ + b.q_);
  if (a.kind_ == K::Exact && sgn(a.q_) == 0) return b;
  if (b.kind_ == K::Exact && sgn(b.q_) == 0) return a;
  return Scalar::real(a.toDouble() + b.toDouble());
}

Scalar Scalar::operator-() const {
  switch (kind_) {
    case Kind::Exact: return exact(-q_);
    case Kind::PiMultiple: return piTimes(-q_);
    case Kind::Real: return real(-d_);
  }
  return *this;
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
  using K = Scalar::Kind;
  if (a.kind_ == K::Exact && b.kind_ == K::Exact) return Scalar::exact(a.q_ * b.q_);
  if (a.kind_ == K::Exact && b.kind_ == K::PiMultiple) return Scalar::piTimes(a.q_ * b.q_);
  if (a.kind_ == K::PiMultiple && b.kind_ == K::Exact) return Scalar::piTimes(a.q_ * b.q_);
  if ((a.kind_ == K::Exact && sgn(a.q_) == 0) || (b.kind_ == K::Exact && sgn(b.q_) == 0)) return Scalar::exact(0);
  return Scalar::real(a.toDouble() * b.toDouble());
}

Scalar operator/(const Scalar& a, const Scalar& b) {
  using K = Scalar::Kind;
  if (b.toDouble() == 0 && (b.kind_ != K::Real || b.d_ == 0))
    throw Error(ErrorCode::InvalidArgument, "division by zero");
  if (a.kind_ == K::Exact && b.kind_ == K::Exact) return Scalar::exact(a.q_ / b.q_);
  if (a.kind_ == K::PiMultiple && b.kind_ == K::Exact) return Scalar::piTimes(a.q_ / b.q_);
  if (a.kind_ == K::PiMultiple && b.kind_ == K::PiMultiple) return Scalar::exact(a.q_ / b.q_);
  if (a.kind_ == K::Exact && sgn(a.q_) == 0) return Scalar::exact(0);
  return Scalar::real(a.toDouble() / b.toDouble());
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.kind_ != b.kind_) return false;
  return a.kind_ == Scalar::Kind::Real ? a.d_ == b.d_ : a.q_ == b.q_;
}

Scalar sinScalar(const Scalar& x) {
  Rational out;
  if (x.kind() == Scalar::Kind::PiMultiple && exactSinPi(x.rational(), out)) return Scalar::exact(out);
  if (x.isExact() && sgn(x.rational()) == 0) return Scalar::exact(0);
  return Scalar::real(std::sin(x.toDouble()));
}

Scalar cosScalar(const Scalar& x) {
  Rational out;
  if (x.kind() == Scalar::Kind::PiMultiple && exactSinPi(x.rational() + makeRational(1, 2), out))
    return Scalar::exact(out);
  if (x.isExact() && sgn(x.rational()) == 0) return Scalar::exact(1);
  return Scalar::real(std::cos(x.toDouble()));
}

Scalar sqrtScalar(const Scalar& x) {
  if (x.toDouble() < 0) throw Error(ErrorCode::InvalidArgument, "square root of a negative value");
  if (x.isExact()) {
    mpz_class n = x.rational().get_num(), d = x.rational().get_den();
    if (mpz_perfect_square_p(n.get_mpz_t()) && mpz_perfect_square_p(d.get_mpz_t())) {
      mpz_class rn, rd;
      mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
      mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
      return Scalar::exact(Rational(rn, rd));
    }
  }
  return Scalar::real(std::sqrt(x.toDouble()));
}

Scalar powScalar(const Scalar& x, const Rational& p) {
  if (isInteger(p) && x.isExact()) {
    long k = p.get_num().get_si();
    Rational base = x.rational();
    if (k < 0) {
      if (sgn(base) == 0) throw Error(ErrorCode::InvalidArgument, "zero to a negative power");
      base = 1 / base;
      k = -k;
    }
    Rational r = 1;
    for (long j = 0; j < k; ++j) r *= base;
    return Scalar::exact(r);
  }
  if (p == makeRational(1, 2)) return sqrtScalar(x);
  return Scalar::real(std::pow(x.toDouble(), p.get_d()));
}

SymbolPoly toSymbol(const Value& v, int nvars) {
  if (std::holds_alternative<SymbolPoly>(v)) return std::get<SymbolPoly>(v);
  return SymbolPoly::constant(nvars, CRat(std::get<Scalar>(v).toRational()));
}

Value evaluate(const Expr& e, const Environment& env) {
  using K = Expr::Kind;
  auto both = [&](auto&& scalarOp, auto&& symbolOp) -> Value {
    Value a = evaluate(*e.args[0], env), b = evaluate(*e.args[1], env);
    if (std::holds_alternative<Scalar>(a) && std::holds_alternative<Scalar>(b))
      return scalarOp(std::get<Scalar>(a), std::get<Scalar>(b));
    return symbolOp(toSymbol(a, env.nvars), toSymbol(b, env.nvars));
  };
  switch (e.kind) {
    case K::Number:
      return Scalar::exact(e.number);
    case K::Identifier: {
      if (e.name == "pi") return Scalar::piTimes(1);
      if (auto it = env.scalars.find(e.name); it != env.scalars.end()) return it->second;
      if (auto it = env.symbols.find(e.name); it != env.symbols.end()) return it->second;
      if (e.name == "eps") {
        if (!env.allowEps) fail(e, ErrorCode::UndefinedName, "'eps' is not allowed here");
        return SymbolPoly::epsPower(env.nvars, 1);
      }
      if (e.name == "i") return SymbolPoly::constant(env.nvars, CRat::imagUnit());
      fail(e, ErrorCode::UndefinedName, "undefined name '" + e.name + "'");
    }
    case K::Neg: {
      Value v = evaluate(*e.args[0], env);
      if (std::holds_alternative<Scalar>(v)) return -std::get<Scalar>(v);
      return -std::get<SymbolPoly>(v);
    }
    case K::Add:
      return both([](const Scalar& a, const Scalar& b) { return a + b; },
                  [](const SymbolPoly& a, const SymbolPoly& b) { return a + b; });
    case K::Sub:
      return both([](const Scalar& a, const Scalar& b) { return a - b; },
                  [](const SymbolPoly& a, const SymbolPoly& b) { return a - b; });
    case K::Mul:
      return both([](const Scalar& a, const Scalar& b) { return a * b; },
                  [](const SymbolPoly& a, const SymbolPoly& b) { return a * b; });
    case K::Div: {
      Value a = evaluate(*e.args[0], env), b = evaluate(*e.args[1], env);
      if (std::holds_alternative<Scalar>(b)) {
        const Scalar& d = std::get<Scalar>(b);
        if (d.toDouble() == 0) fail(e, ErrorCode::NonPolynomial, "division by zero");
        if (std::holds_alternative<Scalar>(a)) return std::get<Scalar>(a) / d;
        return std::get<SymbolPoly>(a).scaled(CRat(1) / CRat(d.toRational()));
      }
      const SymbolPoly& d = std::get<SymbolPoly>(b);
      if (!d.isConstant() || d.isZero())
        fail(e, ErrorCode::NonPolynomial, "division is only allowed by nonzero constants");
      CRat c = d.terms().begin()->second;
      return toSymbol(a, env.nvars).scaled(CRat(1) / c);
    }
    case K::Pow: {
      Value base = evaluate(*e.args[0], env);
      const Rational& p = e.exponent;
      if (std::holds_alternative<Scalar>(base)) {
        try {
          return powScalar(std::get<Scalar>(base), p);
        } catch (const Error& err) {
          fail(e, ErrorCode::NonPolynomial, err.what());
        }
      }
      const SymbolPoly& s = std::get<SymbolPoly>(base);
      Rational power;
      CRat coefficient;
      if (isPureEpsMonomial(s, power, coefficient)) {
        if (!isInteger(p) && coefficient != CRat(1))
          fail(e, ErrorCode::NonPolynomial, "fractional power of a scaled eps monomial");
        CRat c(1);
        if (isInteger(p)) {
          long k = p.get_num().get_si();
          c = pow(coefficient, static_cast<unsigned>(std::labs(k)));
          if (k < 0) c = CRat(1) / c;
        }
        return SymbolPoly::epsPower(env.nvars, power * p).scaled(c);
      }
      if (!isInteger(p) || sgn(p) < 0)
        fail(e, ErrorCode::NonPolynomial,
             "only eps may carry negative or fractional exponents (got ^" + p.get_str() + ")");
      return s.pow(static_cast<unsigned>(p.get_num().get_ui()));
    }
    case K::Call: {
      if (e.args.size() != 1) fail(e, ErrorCode::Parse, "function '" + e.name + "' takes one argument");
      Value v = evaluate(*e.args[0], env);
      if (!std::holds_alternative<Scalar>(v))
        fail(e, ErrorCode::NonPolynomial, "function '" + e.name + "' needs a constant argument");
      const Scalar& x = std::get<Scalar>(v);
      if (e.name == "sin") return sinScalar(x);
      if (e.name == "cos") return cosScalar(x);
      if (e.name == "sqrt") {
        if (x.toDouble() < 0) fail(e, ErrorCode::NonPolynomial, "square root of a negative value");
        return sqrtScalar(x);
      }
      fail(e, ErrorCode::UndefinedName, "unknown function '" + e.name + "'");
    }
    case K::Tuple:
      fail(e, ErrorCode::Parse, "tuple not allowed here");
  }
  fail(e, ErrorCode::Internal, "unhandled expression");
}

Scalar evaluateScalar(const Expr& e, const Environment& env) {
  Value v = evaluate(e, env);
  if (std::holds_alternative<Scalar>(v)) return std::get<Scalar>(v);
  const SymbolPoly& s = std::get<SymbolPoly>(v);
  if (s.isZero()) return Scalar::exact(0);
  if (s.isConstant() && s.terms().begin()->second.isReal())
    return Scalar::exact(s.terms().begin()->second.re());
  fail(e, ErrorCode::NonPolynomial, "expected a real constant");
}

SymbolPoly evaluateSymbol(const Expr& e, const Environment& env) { return toSymbol(evaluate(e, env), env.nvars); }

}  // namespace blexpand::dsl
