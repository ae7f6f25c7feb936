#include "blexpand/reference.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>
#include <algorithm>
#include <sstream>

#include "blexpand/error.hpp"

namespace blexpand {

namespace {

namespace mp = boost::multiprecision;
using Real = mp::cpp_bin_float_50;
using Cx = mp::cpp_complex_50;
using CxPoly = std::vector<Cx>;

Cx toCx(const Complex& z) { return Cx(Real(z.real()), Real(z.imag())); }
Complex toComplex(const Cx& z) { return {static_cast<double>(z.real()), static_cast<double>(z.imag())}; }
Real absCx(const Cx& z) { return mp::abs(z); }

Real toReal(const Rational& q) { return Real(q.get_num().get_str()) / Real(q.get_den().get_str()); }

Cx evalCx(const CxPoly& p, const Cx& z) {
  Cx s = 0;
  for (std::size_t k = p.size(); k-- > 0;) s = s * z + p[k];
  return s;
}

CxPoly derivativeCx(const CxPoly& p, int times = 1) {
  CxPoly q = p;
  for (int t = 0; t < times; ++t) {
    if (q.size() <= 1) return {};
    CxPoly d(q.size() - 1);
    for (std::size_t k = 1; k < q.size(); ++k) d[k - 1] = q[k] * Real(k);
    q = d;
  }
  return q;
}

CxPoly antiderivativeCx(const CxPoly& p) {
  CxPoly q(p.size() + 1, Cx(0));
  for (std::size_t k = 0; k < p.size(); ++k) q[k + 1] = p[k] / Real(k + 1);
  return q;
}

// Solves A X = B in place (A square); returns the inverse in `inverse`.
void gaussJordan(std::vector<std::vector<Cx>> a, std::vector<std::vector<Cx>>& inverse) {
  const std::size_t n = a.size();
  inverse.assign(n, std::vector<Cx>(n, Cx(0)));
  for (std::size_t k = 0; k < n; ++k) inverse[k][k] = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    for (std::size_t r = c + 1; r < n; ++r)
      if (absCx(a[r][c]) > absCx(a[piv][c])) piv = r;
    if (absCx(a[piv][c]) == 0) throw Error(ErrorCode::IllConditioned, "singular reference system");
    std::swap(a[piv], a[c]);
    std::swap(inverse[piv], inverse[c]);
    Cx inv = Cx(1) / a[c][c];
    for (std::size_t k = 0; k < n; ++k) {
      a[c][k] *= inv;
      inverse[c][k] *= inv;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c] == Cx(0)) continue;
      Cx f = a[r][c];
      for (std::size_t k = 0; k < n; ++k) {
        a[r][k] -= f * a[c][k];
        inverse[r][k] -= f * inverse[c][k];
      }
    }
  }
}

}  // namespace

ReferenceSolution referenceSolve(const Problem1D& problem, double eps, const std::vector<double>& grid,
                                 double maxCondition) {
  if (!(eps > 0)) throw Error(ErrorCode::InvalidArgument, "eps must be positive");
  const Real e(eps);
  const Real a(problem.left.x), b(problem.right.x);

  // characteristic polynomial C(lambda) = P(-i lambda)
  const int m = problem.symbol.xinDegree();
  CxPoly C(m + 1, Cx(0));
  for (const auto& [key, c] : problem.symbol.terms()) {
    Real scale = mp::pow(e, toReal(problem.symbol.epsExponent(key)));
    Cx minusI(0, -1), factor = 1;
    for (int k = 0; k < key.xdeg; ++k) factor *= minusI;
    C[key.xdeg] += Cx(toReal(c.re()), toReal(c.im())) * scale * factor;
  }
  if (C[m] == Cx(0)) throw Error(ErrorCode::InvalidArgument, "leading coefficient vanishes at this eps");
  int k0 = 0;
  while (C[k0] == Cx(0)) ++k0;

  // nonzero roots: double precision start, Newton in 50 digits
  ComplexPoly reduced;
  for (int k = k0; k <= m; ++k) reduced.push_back(toComplex(C[k]));
  std::vector<Cx> roots;
  CxPoly Cr(C.begin() + k0, C.end());
  CxPoly dCr = derivativeCx(Cr);
  if (reduced.size() > 1) {
    for (const Complex& z0 : polyRoots(reduced)) {
      Cx z = toCx(z0);
      for (int it = 0; it < 200; ++it) {
        Cx step = evalCx(Cr, z) / evalCx(dCr, z);
        z -= step;
        if (absCx(step) <= Real("1e-45") * std::max<Real>(Real(1), absCx(z))) break;
      }
      roots.push_back(z);
    }
  }
  for (std::size_t i = 0; i < roots.size(); ++i)
    for (std::size_t j = i + 1; j < roots.size(); ++j)
      if (absCx(roots[i] - roots[j]) <= Real("1e-30") * std::max<Real>(Real(1), absCx(roots[i])))
        throw Error(ErrorCode::IllConditioned, "repeated characteristic root");

  // polynomial particular solution: sum_k C[k] u^(k) = eps^p f
  CxPoly F;
  Real fscale = mp::pow(e, toReal(problem.forcingEps));
  for (const auto& c : problem.forcing) F.push_back(toCx(c) * fscale);
  CxPoly w(F.size(), Cx(0));
  {
    CxPoly residual = F;
    for (std::size_t iter = 0; iter <= F.size() + 1; ++iter) {
      for (std::size_t k = 0; k < residual.size() && k < w.size(); ++k) w[k] += residual[k] / C[k0];
      CxPoly lhs(w.size(), Cx(0));
      for (int k = k0; k <= m; ++k) {
        CxPoly d = derivativeCx(w, k - k0);
        for (std::size_t t = 0; t < d.size(); ++t) lhs[t] += C[k] * d[t];
      }
      for (std::size_t k = 0; k < residual.size(); ++k) residual[k] = F[k] - lhs[k];
    }
  }
  CxPoly up = w;
  for (int t = 0; t < k0; ++t) up = antiderivativeCx(up);

  // homogeneous basis: ((x - a)/(b - a))^q for the zero root, anchored
  // exponentials for the others
  const int n = m;
  auto basisDerivative = [&](int col, const Real& x, int order) -> Cx {
    if (col < k0) {
      CxPoly mono(col + 1, Cx(0));
      mono[col] = Cx(mp::pow(Real(1) / (b - a), col));
      CxPoly shifted = derivativeCx(mono, order);
      return evalCx(shifted, Cx(x - a));
    }
    const Cx& lam = roots[col - k0];
    const Real& anchor = lam.real() > 0 ? b : a;
    Cx pw = 1;
    for (int k = 0; k < order; ++k) pw *= lam;
    return pw * mp::exp(lam * Cx(x - anchor));
  };

  std::vector<std::pair<Real, TraceCondition>> rows;
  for (const auto& c : problem.left.conditions) rows.push_back({a, c});
  for (const auto& c : problem.right.conditions) rows.push_back({b, c});
  if (static_cast<int>(rows.size()) != n) {
    std::ostringstream os;
    os << rows.size() << " boundary conditions for an order " << n << " operator";
    throw Error(ErrorCode::InvalidArgument, os.str());
  }
  std::vector<std::vector<Cx>> A(n, std::vector<Cx>(n));
  std::vector<Cx> rhs(n);
  for (int r = 0; r < n; ++r) {
    const auto& [x, cond] = rows[r];
    Real rowMax = 0;
    for (int c = 0; c < n; ++c) {
      A[r][c] = basisDerivative(c, x, cond.order);
      rowMax = std::max<Real>(rowMax, absCx(A[r][c]));
    }
    rhs[r] = toCx(cond.value) - evalCx(derivativeCx(up, cond.order), Cx(x));
    if (rowMax > 0) {
      for (auto& v : A[r]) v /= rowMax;
      rhs[r] /= rowMax;
    }
  }
  std::vector<std::vector<Cx>> inv;
  gaussJordan(A, inv);
  auto normInf = [&](const std::vector<std::vector<Cx>>& M) {
    Real best = 0;
    for (const auto& row : M) {
      Real s = 0;
      for (const auto& v : row) s += absCx(v);
      best = std::max<Real>(best, s);
    }
    return best;
  };
  ReferenceSolution out;
  out.eps = eps;
  out.condition = static_cast<double>(normInf(A) * normInf(inv));
  if (!(out.condition <= maxCondition)) {
    std::ostringstream os;
    os << "condition number " << out.condition << " exceeds " << maxCondition << " at eps = " << eps;
    throw Error(ErrorCode::IllConditioned, os.str());
  }
  std::vector<Cx> coef(n, Cx(0));
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) coef[r] += inv[r][c] * rhs[c];

  for (const auto& r : roots) out.characteristicRoots.push_back(toComplex(r));
  out.x = grid;
  for (double xd : grid) {
    Real x(xd);
    Cx v = evalCx(up, Cx(x));
    for (int c = 0; c < n; ++c) v += coef[c] * basisDerivative(c, x, 0);
    out.values.push_back(toComplex(v));
  }
  return out;
}

}  // namespace blexpand
