#include "blexpand/rational.hpp"

#include <cmath>
#include <numeric>

#include "blexpand/error.hpp"

namespace blexpand {

Rational makeRational(long num, long den) {
  if (den == 0) throw Error(ErrorCode::InvalidArgument, "zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational rationalFromDouble(double value) {
  if (!std::isfinite(value)) throw Error(ErrorCode::InvalidArgument, "non-finite value has no rational form");
  return Rational(value);
}

namespace {

Rational pow10(long exponent) {
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
  Rational r(p);
  if (exponent < 0) r = 1 / r;
  return r;
}

}  // namespace

Rational parseRational(std::string_view text) {
  std::string s(text);
  auto bad = [&] { return Error(ErrorCode::InvalidArgument, "not a rational literal: '" + s + "'"); };
  if (s.empty()) throw bad();
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    Rational num = parseRational(s.substr(0, slash));
    Rational den = parseRational(s.substr(slash + 1));
    if (sgn(den) == 0) throw bad();
    return num / den;
  }
  std::size_t pos = 0;
  bool negative = false;
  if (s[pos] == '+' || s[pos] == '-') negative = s[pos++] == '-';
  mpz_class mantissa = 0;
  long scale = 0;
  bool digits = false, dot = false;
  for (; pos < s.size(); ++pos) {
    char c = s[pos];
    if (c >= '0' && c <= '9') {
      mantissa = mantissa * 10 + (c - '0');
      if (dot) --scale;
      digits = true;
    } else if (c == '.' && !dot) {
      dot = true;
    } else {
      break;
    }
  }
  if (!digits) throw bad();
  if (pos < s.size()) {
    if (s[pos] != 'e' && s[pos] != 'E') throw bad();
    ++pos;
    std::size_t used = 0;
    long e = 0;
    try {
      e = std::stol(s.substr(pos), &used);
    } catch (const std::exception&) {
      throw bad();
    }
    if (pos + used != s.size()) throw bad();
    scale += e;
  }
  Rational r(mantissa);
  r *= pow10(scale);
  r.canonicalize();
  return negative ? Rational(-r) : r;
}

std::string toString(const Rational& value) { return value.get_str(); }

double toDouble(const Rational& value) { return value.get_d(); }

long lcmLong(long a, long b) { return std::lcm(a, b); }

bool isInteger(const Rational& value) { return value.get_den() == 1; }

CRat::CRat(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

CRat CRat::fromDouble(std::complex<double> value) {
  return CRat(rationalFromDouble(value.real()), rationalFromDouble(value.imag()));
}

std::complex<double> CRat::toComplex() const { return {re_.get_d(), im_.get_d()}; }

std::string CRat::str() const {
  if (isReal()) return re_.get_str();
  std::string imag = (im_ == 1) ? "i" : (im_ == -1) ? "-i" : im_.get_str() + "i";
  if (sgn(re_) == 0) return imag;
  if (sgn(im_) > 0) return re_.get_str() + "+" + imag;
  return re_.get_str() + imag;
}

CRat& CRat::operator+=(const CRat& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

CRat& CRat::operator-=(const CRat& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

CRat& CRat::operator*=(const CRat& o) {
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

CRat& CRat::operator/=(const CRat& o) {
  Rational n = o.norm2();
  if (sgn(n) == 0) throw Error(ErrorCode::InvalidArgument, "division by zero");
  Rational re = (re_ * o.re_ + im_ * o.im_) / n;
  Rational im = (im_ * o.re_ - re_ * o.im_) / n;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

CRat pow(const CRat& base, unsigned exponent) {
  CRat result(1), b = base;
  while (exponent) {
    if (exponent & 1u) result *= b;
    b *= b;
    exponent >>= 1u;
  }
  return result;
}

}  // namespace blexpand
