#include "blexpand/invariance.hpp"

#include <algorithm>
#include <sstream>

#include "blexpand/error.hpp"

namespace blexpand {

namespace {

Rational determinant(std::vector<std::vector<Rational>> m) {
  const std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && sgn(m[p][c]) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      Rational f = m[r][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return det;
}

Rational smallRational(std::mt19937& rng, int numRange, int denRange) {
  std::uniform_int_distribution<int> num(-numRange, numRange), den(1, denRange);
  return makeRational(num(rng), den(rng));
}

}  // namespace

SymbolPoly pushForward(const SymbolPoly& a, const AffineChartMap& map) {
  const int nv = a.nvars();
  if (static_cast<int>(map.tangential.size()) != nv || static_cast<int>(map.shear.size()) != nv)
    throw Error(ErrorCode::InvalidArgument, "chart map dimension does not match the symbol");
  if (map.normalScale <= 0) throw Error(ErrorCode::InvalidArgument, "normal scale must be positive");
  if (nv > 0 && sgn(determinant(map.tangential)) == 0)
    throw Error(ErrorCode::InvalidArgument, "tangential part of the chart map is singular");
  std::vector<SymbolPoly> zetaImages;
  for (int k = 0; k < nv; ++k) {
    SymbolPoly img(nv);
    for (int j = 0; j < nv; ++j)
      img = img + SymbolPoly::constant(nv, CRat(map.tangential[j][k])) * SymbolPoly::zeta(nv, j);
    zetaImages.push_back(img);
  }
  SymbolPoly xinImage = SymbolPoly::constant(nv, CRat(map.normalScale)) * SymbolPoly::xin(nv);
  for (int j = 0; j < nv; ++j)
    xinImage = xinImage + SymbolPoly::constant(nv, CRat(map.shear[j])) * SymbolPoly::zeta(nv, j);
  return a.substitute(zetaImages, xinImage);
}

InvarianceResult affineInvarianceCheck(const SymbolPoly& a, const AffineChartMap& map) {
  InvarianceResult r;
  auto samples = defaultZetaSamples(a.nvars());
  r.before = profileAt(a, samples).pattern();
  r.after = profileAt(pushForward(a, map), samples).pattern();
  r.pass = r.before.str() == r.after.str();
  r.evidence = r.before.str() + (r.pass ? " == " : " != ") + r.after.str();
  return r;
}

SymbolPoly randomLayeredSymbol(std::mt19937& rng, int nvars) {
  static const Rational gammas[] = {makeRational(1, 4), makeRational(1, 3), makeRational(1, 2), Rational(1),
                                    makeRational(3, 2)};
  std::uniform_int_distribution<int> classCount(1, 3), mult(1, 2), regular(0, 2), pick(0, 4);
  auto cst = [&](const CRat& c) { return SymbolPoly::constant(nvars, c); };
  SymbolPoly norm2 = cst(CRat(1));
  for (int k = 0; k < nvars; ++k) norm2 = norm2 + SymbolPoly::zeta(nvars, k).pow(2);
  auto nonzero = [&] {
    CRat c;
    while (c.isZero()) c = CRat(smallRational(rng, 3, 3), smallRational(rng, 3, 3));
    return c;
  };

  SymbolPoly a = cst(CRat(1));
  std::vector<int> used;
  int classes = classCount(rng);
  while (static_cast<int>(used.size()) < classes) {
    int g = pick(rng);
    if (std::find(used.begin(), used.end(), g) == used.end()) used.push_back(g);
  }
  for (int g : used) {
    int m = mult(rng);
    for (int k = 0; k < m; ++k) {
      // |zeta|^2 + 1 times a nonzero constant, plus an imaginary offset:
      // no real zero, top part definite.
      SymbolPoly lambda = cst(nonzero()) * norm2 + cst(CRat(0, smallRational(rng, 2, 2)));
      a = a * (SymbolPoly::epsPower(nvars, gammas[g]) * SymbolPoly::xin(nvars) - lambda);
    }
  }
  for (int k = regular(rng); k > 0; --k) {
    SymbolPoly mu = cst(nonzero());
    for (int j = 0; j < nvars; ++j) mu = mu + cst(CRat(smallRational(rng, 2, 2))) * SymbolPoly::zeta(nvars, j);
    a = a * (SymbolPoly::xin(nvars) - mu);
  }
  return a;
}

AffineChartMap randomChartMap(std::mt19937& rng, int nvars) {
  AffineChartMap map;
  do {
    map.tangential.assign(nvars, std::vector<Rational>(nvars));
    for (auto& row : map.tangential)
      for (auto& v : row) v = smallRational(rng, 3, 2);
  } while (nvars > 0 && sgn(determinant(map.tangential)) == 0);
  map.shear.resize(nvars);
  for (auto& v : map.shear) v = smallRational(rng, 2, 2);
  std::uniform_int_distribution<int> num(1, 4), den(1, 3);
  map.normalScale = makeRational(num(rng), den(rng));
  return map;
}

}  // namespace blexpand
