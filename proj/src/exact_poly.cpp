#include "blexpand/exact_poly.hpp"

#include <cstdlib>

#include "blexpand/error.hpp"

namespace blexpand {

namespace {

std::vector<RatPoly> sturmSequence(const RatPoly& p) {
  std::vector<RatPoly> seq{p, p.derivative()};
  while (!seq.back().isZero()) {
    RatPoly r = RatPoly::divmod(seq[seq.size() - 2], seq.back()).second;
    if (r.isZero()) break;
    seq.push_back(RatPoly() - r);
  }
  return seq;
}

int signChanges(const std::vector<RatPoly>& seq, const Rational& x) {
  int changes = 0, last = 0;
  for (const auto& q : seq) {
    int s = sgn(q.eval(x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

RatPoly squarefreePart(const RatPoly& p) {
  RatPoly g = RatPoly::gcd(p, p.derivative());
  return RatPoly::divmod(p, g).first;
}

}  // namespace

int countRealRoots(const RatPoly& p, const Rational& lo, const Rational& hi) {
  if (p.isZero()) throw Error(ErrorCode::ZeroPolynomial, "root count of the zero polynomial");
  if (p.degree() == 0 || !(lo < hi)) return 0;
  auto seq = sturmSequence(squarefreePart(p));
  return signChanges(seq, lo) - signChanges(seq, hi);
}

Rational rootBound(const RatPoly& p) {
  Rational m = 0;
  for (int k = 0; k < p.degree(); ++k) {
    Rational a = abs(p.coeff(k) / p.lead());
    if (a > m) m = a;
  }
  return m + 1;
}

std::vector<Rational> isolateRealRoots(const RatPoly& p, const Rational& tol) {
  std::vector<Rational> roots;
  if (p.degree() < 1) return roots;
  RatPoly sq = squarefreePart(p);
  auto seq = sturmSequence(sq);
  Rational b = rootBound(sq);
  std::vector<std::pair<Rational, Rational>> stack{{-b, b}};
  while (!stack.empty()) {
    auto [lo, hi] = stack.back();
    stack.pop_back();
    int n = signChanges(seq, lo) - signChanges(seq, hi);
    if (n == 0) continue;
    if (n == 1 && hi - lo <= tol) {
      roots.push_back((lo + hi) / 2);
      continue;
    }
    Rational mid = (lo + hi) / 2;
    stack.push_back({mid, hi});
    stack.push_back({lo, mid});
  }
  return roots;
}

std::vector<std::pair<CRatPoly, int>> squarefreeDecomposition(const CRatPoly& p) {
  std::vector<std::pair<CRatPoly, int>> out;
  if (p.degree() < 1) return out;
  CRatPoly dp = p.derivative();
  CRatPoly a = CRatPoly::gcd(p, dp);
  CRatPoly b = CRatPoly::divmod(p, a).first;
  CRatPoly c = CRatPoly::divmod(dp, a).first;
  CRatPoly d = c - b.derivative();
  int k = 1;
  while (b.degree() >= 1) {
    CRatPoly g = CRatPoly::gcd(b, d);
    if (g.degree() >= 1) out.emplace_back(g, k);
    b = CRatPoly::divmod(b, g).first;
    c = CRatPoly::divmod(d, g).first;
    d = c - b.derivative();
    ++k;
  }
  return out;
}

}  // namespace blexpand
