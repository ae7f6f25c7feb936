#pragma once

#include <complex>
#include <map>
#include <string>
#include <vector>

#include "blexpand/rational.hpp"

namespace blexpand {

// Monomial key: eps^(e/qden) * xin^xdeg * prod zeta_k^zdeg[k].
struct MonomialKey {
  long e = 0;
  int xdeg = 0;
  std::vector<int> zdeg;
  auto operator<=>(const MonomialKey&) const = default;
};

// Coefficients frozen at a numeric zeta, grouped by xin-degree and then by
// the exact eps exponent.
using FrozenPoly = std::map<int, std::map<Rational, CRat>>;

// Polynomial in (eps^(1/qden), xin, zeta_1..zeta_nvars) with exact complex
// rational coefficients. Eps exponents may be negative.
class SymbolPoly {
 public:
  explicit SymbolPoly(int nvars = 0);

  static SymbolPoly constant(int nvars, const CRat& c);
  static SymbolPoly epsPower(int nvars, const Rational& power);
  static SymbolPoly xin(int nvars);
  static SymbolPoly zeta(int nvars, int index);

  int nvars() const { return nvars_; }
  long qden() const { return qden_; }
  const std::map<MonomialKey, CRat>& terms() const { return terms_; }
  bool isZero() const { return terms_.empty(); }
  bool isConstant() const;
  bool dependsOnZeta() const;
  Rational epsExponent(const MonomialKey& key) const {
    Rational r(key.e, qden_);
    r.canonicalize();
    return r;
  }

  // Adds c * eps^power * xin^xdeg * zeta^zdeg.
  void addTerm(const Rational& power, int xdeg, const std::vector<int>& zdeg, const CRat& c);

  SymbolPoly operator-() const;
  friend SymbolPoly operator+(const SymbolPoly& a, const SymbolPoly& b);
  friend SymbolPoly operator-(const SymbolPoly& a, const SymbolPoly& b);
  friend SymbolPoly operator*(const SymbolPoly& a, const SymbolPoly& b);
  friend bool operator==(const SymbolPoly& a, const SymbolPoly& b);
  SymbolPoly scaled(const CRat& c) const;
  SymbolPoly pow(unsigned k) const;

  int xinDegree() const;
  int minXinDegree() const;
  Rational minValuation() const;
  // Minimum eps valuation among terms of the given xin degree.
  Rational valuationAtDegree(int xdeg) const;

  // eps^(-beta) a(zeta, xin / eps^gamma).
  SymbolPoly rescale(const Rational& gamma, const Rational& beta) const;
  // Keeps eps^0 terms; throws NegativeValuation if any exponent is negative.
  SymbolPoly limitEpsZero() const;
  // Terms with xin degree >= k, divided by xin^k.
  SymbolPoly divideXinPower(int k) const;
  // Substitutes zeta_k -> zetaImages[k] and xin -> xinImage; images share a
  // common nvars which becomes the result's nvars.
  SymbolPoly substitute(const std::vector<SymbolPoly>& zetaImages, const SymbolPoly& xinImage) const;
  // Coefficient of xin^k as a polynomial in (eps, zeta).
  SymbolPoly xinCoefficient(int k) const;

  // Complex coefficients in xin, ascending, at numeric eps > 0 and zeta.
  std::vector<std::complex<double>> evalEps(double eps, const std::vector<std::complex<double>>& zeta) const;
  FrozenPoly frozen(const std::vector<Rational>& zeta) const;
  // Requires an eps-free symbol; exact coefficients in xin.
  std::vector<CRat> exactCoefficients(const std::vector<Rational>& zeta) const;

  std::string str() const;

 private:
  void normalize();
  int nvars_;
  long qden_ = 1;
  std::map<MonomialKey, CRat> terms_;
};

}  // namespace blexpand
