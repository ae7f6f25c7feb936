#include "blexpand/symbol_poly.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "blexpand/error.hpp"

namespace blexpand {

namespace {

long toLong(const mpz_class& z) {
  if (!z.fits_slong_p()) throw Error(ErrorCode::InvalidArgument, "eps exponent out of range");
  return z.get_si();
}

std::string coefficientText(const CRat& c, bool& negative) {
  negative = false;
  if (c.isReal()) {
    negative = sgn(c.re()) < 0;
    return Rational(abs(c.re())).get_str();
  }
  if (sgn(c.re()) == 0) {
    negative = sgn(c.im()) < 0;
    Rational m = abs(c.im());
    return m == 1 ? "i" : m.get_str() + "*i";
  }
  return "(" + c.str() + ")";
}

}  // namespace

SymbolPoly::SymbolPoly(int nvars) : nvars_(nvars) {
  if (nvars < 0) throw Error(ErrorCode::InvalidArgument, "negative nvars");
}

SymbolPoly SymbolPoly::constant(int nvars, const CRat& c) {
  SymbolPoly p(nvars);
  p.addTerm(0, 0, std::vector<int>(nvars, 0), c);
  return p;
}

SymbolPoly SymbolPoly::epsPower(int nvars, const Rational& power) {
  SymbolPoly p(nvars);
  p.addTerm(power, 0, std::vector<int>(nvars, 0), CRat(1));
  return p;
}

SymbolPoly SymbolPoly::xin(int nvars) {
  SymbolPoly p(nvars);
  p.addTerm(0, 1, std::vector<int>(nvars, 0), CRat(1));
  return p;
}

SymbolPoly SymbolPoly::zeta(int nvars, int index) {
  if (index < 0 || index >= nvars) throw Error(ErrorCode::InvalidArgument, "zeta index out of range");
  std::vector<int> z(nvars, 0);
  z[index] = 1;
  SymbolPoly p(nvars);
  p.addTerm(0, 0, z, CRat(1));
  return p;
}

bool SymbolPoly::isConstant() const {
  for (const auto& [k, c] : terms_)
    if (k.e != 0 || k.xdeg != 0 || k.zdeg != std::vector<int>(nvars_, 0)) return false;
  return true;
}

bool SymbolPoly::dependsOnZeta() const {
  for (const auto& [k, c] : terms_)
    for (int z : k.zdeg)
      if (z != 0) return true;
  return false;
}

void SymbolPoly::addTerm(const Rational& power, int xdeg, const std::vector<int>& zdeg, const CRat& c) {
  if (static_cast<int>(zdeg.size()) != nvars_) throw Error(ErrorCode::InvalidArgument, "zeta degree arity");
  if (xdeg < 0) throw Error(ErrorCode::InvalidArgument, "negative xin degree");
  for (int z : zdeg)
    if (z < 0) throw Error(ErrorCode::InvalidArgument, "negative zeta degree");
  if (c.isZero()) return;
  long pden = toLong(power.get_den());
  long newDen = std::lcm(qden_, pden);
  if (newDen != qden_) {
    long f = newDen / qden_;
    std::map<MonomialKey, CRat> rescaled;
    for (auto& [k, v] : terms_) {
      MonomialKey nk = k;
      nk.e *= f;
      rescaled.emplace(std::move(nk), v);
    }
    terms_ = std::move(rescaled);
    qden_ = newDen;
  }
  MonomialKey key{toLong(power.get_num()) * (qden_ / pden), xdeg, zdeg};
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(std::move(key), c);
  } else {
    it->second += c;
    if (it->second.isZero()) terms_.erase(it);
  }
  normalize();
}

void SymbolPoly::normalize() {
  if (terms_.empty()) {
    qden_ = 1;
    return;
  }
  long g = qden_;
  for (const auto& [k, c] : terms_) g = std::gcd(g, std::labs(k.e));
  if (g <= 1) return;
  std::map<MonomialKey, CRat> reduced;
  for (auto& [k, c] : terms_) {
    MonomialKey nk = k;
    nk.e /= g;
    reduced.emplace(std::move(nk), c);
  }
  terms_ = std::move(reduced);
  qden_ /= g;
}

SymbolPoly SymbolPoly::operator-() const { return scaled(CRat(-1)); }

SymbolPoly SymbolPoly::scaled(const CRat& c) const {
  SymbolPoly r(nvars_);
  if (c.isZero()) return r;
  r.qden_ = qden_;
  for (const auto& [k, v] : terms_) r.terms_.emplace(k, v * c);
  return r;
}

SymbolPoly operator+(const SymbolPoly& a, const SymbolPoly& b) {
  if (a.nvars_ != b.nvars_) throw Error(ErrorCode::InvalidArgument, "nvars mismatch in sum");
  SymbolPoly r = a;
  for (const auto& [k, c] : b.terms_) r.addTerm(b.epsExponent(k), k.xdeg, k.zdeg, c);
  return r;
}

SymbolPoly operator-(const SymbolPoly& a, const SymbolPoly& b) { return a + (-b); }

SymbolPoly operator*(const SymbolPoly& a, const SymbolPoly& b) {
  if (a.nvars_ != b.nvars_) throw Error(ErrorCode::InvalidArgument, "nvars mismatch in product");
  SymbolPoly r(a.nvars_);
  long den = std::lcm(a.qden_, b.qden_);
  long fa = den / a.qden_, fb = den / b.qden_;
  std::map<MonomialKey, CRat> acc;
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) {
      MonomialKey k{ka.e * fa + kb.e * fb, ka.xdeg + kb.xdeg, ka.zdeg};
      for (std::size_t i = 0; i < k.zdeg.size(); ++i) k.zdeg[i] += kb.zdeg[i];
      acc[k] += ca * cb;
    }
  }
  for (auto it = acc.begin(); it != acc.end();) it = it->second.isZero() ? acc.erase(it) : std::next(it);
  r.terms_ = std::move(acc);
  r.qden_ = den;
  r.normalize();
  return r;
}

bool operator==(const SymbolPoly& a, const SymbolPoly& b) {
  return a.nvars_ == b.nvars_ && a.qden_ == b.qden_ && a.terms_ == b.terms_;
}

SymbolPoly SymbolPoly::pow(unsigned k) const {
  SymbolPoly result = constant(nvars_, CRat(1)), base = *this;
  while (k) {
    if (k & 1u) result = result * base;
    k >>= 1u;
    if (k) base = base * base;
  }
  return result;
}

int SymbolPoly::xinDegree() const {
  int d = -1;
  for (const auto& [k, c] : terms_) d = std::max(d, k.xdeg);
  return d;
}

int SymbolPoly::minXinDegree() const {
  if (terms_.empty()) throw Error(ErrorCode::EmptyPolynomial, "zero symbol has no degree");
  int d = terms_.begin()->first.xdeg;
  for (const auto& [k, c] : terms_) d = std::min(d, k.xdeg);
  return d;
}

Rational SymbolPoly::minValuation() const {
  if (terms_.empty()) throw Error(ErrorCode::EmptyPolynomial, "zero symbol has no valuation");
  return epsExponent(terms_.begin()->first);
}

Rational SymbolPoly::valuationAtDegree(int xdeg) const {
  for (const auto& [k, c] : terms_)
    if (k.xdeg == xdeg) return epsExponent(k);
  throw Error(ErrorCode::EmptyPolynomial, "no terms of xin degree " + std::to_string(xdeg));
}

SymbolPoly SymbolPoly::rescale(const Rational& gamma, const Rational& beta) const {
  SymbolPoly r(nvars_);
  for (const auto& [k, c] : terms_) r.addTerm(epsExponent(k) - gamma * k.xdeg - beta, k.xdeg, k.zdeg, c);
  return r;
}

SymbolPoly SymbolPoly::limitEpsZero() const {
  SymbolPoly r(nvars_);
  for (const auto& [k, c] : terms_) {
    if (k.e < 0)
      throw Error(ErrorCode::NegativeValuation,
                  "term with eps^" + toString(epsExponent(k)) + " has no limit as eps -> 0");
    if (k.e == 0) r.addTerm(0, k.xdeg, k.zdeg, c);
  }
  return r;
}

SymbolPoly SymbolPoly::divideXinPower(int power) const {
  SymbolPoly r(nvars_);
  for (const auto& [k, c] : terms_)
    if (k.xdeg >= power) r.addTerm(epsExponent(k), k.xdeg - power, k.zdeg, c);
  return r;
}

SymbolPoly SymbolPoly::xinCoefficient(int power) const {
  SymbolPoly r(nvars_);
  for (const auto& [k, c] : terms_)
    if (k.xdeg == power) r.addTerm(epsExponent(k), 0, k.zdeg, c);
  return r;
}

SymbolPoly SymbolPoly::substitute(const std::vector<SymbolPoly>& zetaImages, const SymbolPoly& xinImage) const {
  if (static_cast<int>(zetaImages.size()) != nvars_)
    throw Error(ErrorCode::InvalidArgument, "substitution arity mismatch");
  int outVars = xinImage.nvars();
  for (const auto& z : zetaImages)
    if (z.nvars() != outVars) throw Error(ErrorCode::InvalidArgument, "substitution images disagree on nvars");
  std::map<std::pair<int, int>, SymbolPoly> powers;
  auto power = [&](int var, int k) -> const SymbolPoly& {
    auto key = std::make_pair(var, k);
    auto it = powers.find(key);
    if (it != powers.end()) return it->second;
    const SymbolPoly& base = var < 0 ? xinImage : zetaImages[var];
    return powers.emplace(key, base.pow(static_cast<unsigned>(k))).first->second;
  };
  SymbolPoly result(outVars);
  for (const auto& [k, c] : terms_) {
    SymbolPoly term = SymbolPoly::epsPower(outVars, epsExponent(k)).scaled(c);
    if (k.xdeg) term = term * power(-1, k.xdeg);
    for (int v = 0; v < nvars_; ++v)
      if (k.zdeg[v]) term = term * power(v, k.zdeg[v]);
    result = result + term;
  }
  return result;
}

std::vector<std::complex<double>> SymbolPoly::evalEps(double eps, const std::vector<std::complex<double>>& zeta) const {
  if (!(eps > 0)) throw Error(ErrorCode::InvalidArgument, "eps must be positive");
  if (static_cast<int>(zeta.size()) != nvars_) throw Error(ErrorCode::InvalidArgument, "zeta arity mismatch");
  std::vector<std::complex<double>> out(std::max(0, xinDegree() + 1));
  for (const auto& [k, c] : terms_) {
    std::complex<double> v = c.toComplex() * std::pow(eps, static_cast<double>(k.e) / static_cast<double>(qden_));
    for (int i = 0; i < nvars_; ++i)
      if (k.zdeg[i]) v *= std::pow(zeta[i], k.zdeg[i]);
    out[k.xdeg] += v;
  }
  return out;
}

FrozenPoly SymbolPoly::frozen(const std::vector<Rational>& zeta) const {
  if (static_cast<int>(zeta.size()) != nvars_) throw Error(ErrorCode::InvalidArgument, "zeta arity mismatch");
  FrozenPoly out;
  for (const auto& [k, c] : terms_) {
    CRat v = c;
    for (int i = 0; i < nvars_; ++i)
      if (k.zdeg[i]) v *= blexpand::pow(CRat(zeta[i]), static_cast<unsigned>(k.zdeg[i]));
    out[k.xdeg][epsExponent(k)] += v;
  }
  for (auto& [d, byE] : out)
    for (auto it = byE.begin(); it != byE.end();) it = it->second.isZero() ? byE.erase(it) : std::next(it);
  for (auto it = out.begin(); it != out.end();) it = it->second.empty() ? out.erase(it) : std::next(it);
  return out;
}

std::vector<CRat> SymbolPoly::exactCoefficients(const std::vector<Rational>& zeta) const {
  FrozenPoly f = frozen(zeta);
  std::vector<CRat> out(std::max(0, xinDegree() + 1));
  for (const auto& [d, byE] : f) {
    for (const auto& [e, c] : byE) {
      if (sgn(e) != 0) throw Error(ErrorCode::InvalidArgument, "symbol still depends on eps");
      out[d] += c;
    }
  }
  while (!out.empty() && out.back().isZero()) out.pop_back();
  return out;
}

std::string SymbolPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest xin degree first reads like the usual way of writing symbols.
  std::vector<std::pair<MonomialKey, CRat>> ordered(terms_.begin(), terms_.end());
  std::stable_sort(ordered.begin(), ordered.end(),
                   [](const auto& a, const auto& b) { return a.first.xdeg > b.first.xdeg; });
  for (const auto& [k, c] : ordered) {
    bool negative = false;
    std::string coef = coefficientText(c, negative);
    std::vector<std::string> factors;
    if (k.e != 0) factors.push_back("eps^" + (isInteger(epsExponent(k)) ? toString(epsExponent(k))
                                                                         : "(" + toString(epsExponent(k)) + ")"));
    for (int i = 0; i < nvars_; ++i) {
      if (k.zdeg[i] == 0) continue;
      std::string name = "zeta" + std::to_string(i + 1);
      factors.push_back(k.zdeg[i] == 1 ? name : name + "^" + std::to_string(k.zdeg[i]));
    }
    if (k.xdeg) factors.push_back(k.xdeg == 1 ? "xin" : "xin^" + std::to_string(k.xdeg));
    if (coef != "1" || factors.empty()) factors.insert(factors.begin(), coef);
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    for (std::size_t f = 0; f < factors.size(); ++f) os << (f ? "*" : "") << factors[f];
    first = false;
  }
  return os.str();
}

}  // namespace blexpand
