#pragma once

#include <utility>
#include <vector>

#include "blexpand/rational.hpp"

namespace blexpand {

inline bool isZeroValue(const Rational& v) { return sgn(v) == 0; }
inline bool isZeroValue(const CRat& v) { return v.isZero(); }

// Dense univariate polynomial over an exact field, ascending coefficients,
// no trailing zeros.
template <class F>
class ExactPoly {
 public:
  ExactPoly() = default;
  explicit ExactPoly(std::vector<F> coeffs) : c_(std::move(coeffs)) { trim(); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool isZero() const { return c_.empty(); }
  const std::vector<F>& coeffs() const { return c_; }
  F coeff(int k) const { return k >= 0 && k < static_cast<int>(c_.size()) ? c_[k] : F(0); }
  const F& lead() const { return c_.back(); }

  F eval(const F& x) const {
    F acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  ExactPoly derivative() const {
    std::vector<F> d;
    for (int k = 1; k <= degree(); ++k) d.push_back(c_[k] * F(Rational(k)));
    return ExactPoly(std::move(d));
  }

  ExactPoly monic() const {
    if (isZero()) return *this;
    std::vector<F> m = c_;
    F l = lead();
    for (auto& v : m) v = v / l;
    return ExactPoly(std::move(m));
  }

  friend ExactPoly operator+(const ExactPoly& a, const ExactPoly& b) {
    std::vector<F> r(std::max(a.c_.size(), b.c_.size()), F(0));
    for (std::size_t k = 0; k < a.c_.size(); ++k) r[k] = r[k] + a.c_[k];
    for (std::size_t k = 0; k < b.c_.size(); ++k) r[k] = r[k] + b.c_[k];
    return ExactPoly(std::move(r));
  }
  friend ExactPoly operator-(const ExactPoly& a, const ExactPoly& b) {
    std::vector<F> r(std::max(a.c_.size(), b.c_.size()), F(0));
    for (std::size_t k = 0; k < a.c_.size(); ++k) r[k] = r[k] + a.c_[k];
    for (std::size_t k = 0; k < b.c_.size(); ++k) r[k] = r[k] - b.c_[k];
    return ExactPoly(std::move(r));
  }
  friend ExactPoly operator*(const ExactPoly& a, const ExactPoly& b) {
    if (a.isZero() || b.isZero()) return ExactPoly();
    std::vector<F> r(a.c_.size() + b.c_.size() - 1, F(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
    return ExactPoly(std::move(r));
  }

  // Euclidean division; divisor must be nonzero.
  static std::pair<ExactPoly, ExactPoly> divmod(const ExactPoly& a, const ExactPoly& b) {
    std::vector<F> rem = a.c_;
    int db = b.degree();
    std::vector<F> q(std::max(0, a.degree() - db + 1), F(0));
    for (int k = a.degree(); k >= db; --k) {
      if (isZeroValue(rem[k])) continue;
      F t = rem[k] / b.lead();
      q[k - db] = t;
      for (int j = 0; j <= db; ++j) rem[k - db + j] = rem[k - db + j] - t * b.c_[j];
    }
    return {ExactPoly(std::move(q)), ExactPoly(std::move(rem))};
  }

  static ExactPoly gcd(ExactPoly a, ExactPoly b) {
    while (!b.isZero()) {
      ExactPoly r = divmod(a, b).second;
      a = std::move(b);
      b = r.monic();
    }
    return a.monic();
  }

 private:
  void trim() {
    while (!c_.empty() && isZeroValue(c_.back())) c_.pop_back();
  }
  std::vector<F> c_;
};

using RatPoly = ExactPoly<Rational>;
using CRatPoly = ExactPoly<CRat>;

// Number of distinct real roots of p in the half-open interval (lo, hi].
int countRealRoots(const RatPoly& p, const Rational& lo, const Rational& hi);
// Cauchy bound: every real root satisfies |x| < bound.
Rational rootBound(const RatPoly& p);
// Distinct real roots isolated and bisected to width <= tol.
std::vector<Rational> isolateRealRoots(const RatPoly& p, const Rational& tol);

// Squarefree decomposition: p = c * prod factor_k^k (Yun).
std::vector<std::pair<CRatPoly, int>> squarefreeDecomposition(const CRatPoly& p);

}  // namespace blexpand
