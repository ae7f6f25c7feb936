#pragma once

#include <gmpxx.h>

#include <complex>
#include <string>
#include <string_view>

namespace blexpand {

using Rational = mpq_class;

Rational makeRational(long num, long den = 1);
// Exact binary value of a finite double.
Rational rationalFromDouble(double value);
// Accepts "p", "p/q", decimals ("0.25") and scientific ("1e-3"); exact.
Rational parseRational(std::string_view text);
std::string toString(const Rational& value);
double toDouble(const Rational& value);
long lcmLong(long a, long b);
bool isInteger(const Rational& value);

// Exact Gaussian rational re + i*im.
class CRat {
 public:
  CRat() = default;
  CRat(Rational re, Rational im = 0);
  static CRat fromDouble(std::complex<double> value);
  static CRat imagUnit() { return CRat(0, 1); }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }
  bool isZero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool isReal() const { return sgn(im_) == 0; }
  Rational norm2() const { return re_ * re_ + im_ * im_; }
  CRat conj() const { return CRat(re_, -im_); }
  std::complex<double> toComplex() const;
  std::string str() const;

  CRat& operator+=(const CRat& o);
  CRat& operator-=(const CRat& o);
  CRat& operator*=(const CRat& o);
  CRat& operator/=(const CRat& o);
  friend CRat operator+(CRat a, const CRat& b) { return a += b; }
  friend CRat operator-(CRat a, const CRat& b) { return a -= b; }
  friend CRat operator*(CRat a, const CRat& b) { return a *= b; }
  friend CRat operator/(CRat a, const CRat& b) { return a /= b; }
  CRat operator-() const { return CRat(-re_, -im_); }
  friend bool operator==(const CRat& a, const CRat& b) { return a.re_ == b.re_ && a.im_ == b.im_; }
  friend bool operator!=(const CRat& a, const CRat& b) { return !(a == b); }

 private:
  Rational re_{0};
  Rational im_{0};
};

CRat pow(const CRat& base, unsigned exponent);

}  // namespace blexpand
