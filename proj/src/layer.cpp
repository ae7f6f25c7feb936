#include "blexpand/layer.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>

#include "blexpand/error.hpp"
#include "blexpand/exact_poly.hpp"

namespace blexpand {

namespace {

double magnitude(const std::vector<Rational>& zeta) {
  double s = 0;
  for (const auto& z : zeta) s += z.get_d() * z.get_d();
  return std::sqrt(s);
}

ComplexPoly toComplexPoly(const std::vector<CRat>& c) {
  ComplexPoly p;
  for (const auto& v : c) p.push_back(v.toComplex());
  return p;
}

// Series 1/q up to order n (q[0] != 0).
std::vector<Complex> invertSeries(const std::vector<Complex>& q, int n) {
  std::vector<Complex> r(n + 1);
  r[0] = 1.0 / q[0];
  for (int k = 1; k <= n; ++k) {
    Complex s = 0;
    for (int i = 1; i <= k && i < static_cast<int>(q.size()); ++i) s += q[i] * r[k - i];
    r[k] = -s / q[0];
  }
  return r;
}

}  // namespace

std::vector<LayerOperator> singularOperators(const SingularProfile& profile, const std::string& component,
                                             const std::vector<std::vector<Rational>>& zetaGrid) {
  std::vector<LayerOperator> ops;
  for (std::size_t j = 0; j < profile.classes.size(); ++j) {
    const auto& c = profile.classes[j];
    LayerOperator op;
    op.component = component;
    op.classIndex = static_cast<int>(j);
    op.gamma = c.gamma;
    op.symbol = c.limit;
    op.orderZero = !c.limit.dependsOnZeta();
    if (op.orderZero) {
      std::vector<Rational> none(profile.nvars, 0);
      auto count = upperHalfCount(toComplexPoly(c.limit.exactCoefficients(none)));
      op.mPlus = count.mPlus;
      op.margin = count.margin;
      op.mPlusByZeta = {op.mPlus};
    } else {
      op.margin = INFINITY;
      for (const auto& z : zetaGrid) {
        if (magnitude(z) <= profile.radius) continue;
        auto count = upperHalfCount(toComplexPoly(c.limit.exactCoefficients(z)));
        op.mPlusByZeta.push_back(count.mPlus);
        op.margin = std::min(op.margin, count.margin);
      }
      if (op.mPlusByZeta.empty()) throw Error(ErrorCode::InvalidArgument, "no zeta sample beyond the radius");
      op.mPlus = op.mPlusByZeta.front();
      for (int m : op.mPlusByZeta)
        if (m != op.mPlus) op.mPlus = -1;
    }
    ops.push_back(std::move(op));
  }
  return ops;
}

bool isBoundaryLayerExponent(const LayerOperator& op) {
  if (!op.orderZero && !op.constantCoefficients)
    throw Error(ErrorCode::UnsupportedOperatorClass,
                "layer operator depends on the tangential frequency and varies along the boundary");
  if (op.mPlusByZeta.empty()) return op.mPlus >= 1;
  for (int m : op.mPlusByZeta)
    if (m < 1) return false;
  return true;
}

Complex evalExpPoly(const ExpPoly& f, double theta) {
  Complex acc = 0;
  for (const auto& t : f) {
    Complex p = 0;
    for (auto it = t.poly.rbegin(); it != t.poly.rend(); ++it) p = p * theta + *it;
    acc += p * std::exp(Complex(0, 1) * t.root * theta);
  }
  return acc;
}

Complex omegaByQuadrature(const ComplexPoly& a, const std::vector<BasisRoot>& upperRoots, int j, double theta) {
  using boost::math::quadrature::gauss_kronrod;
  double lowest = INFINITY, reach = 1, top = 1;
  for (const auto& r : upperRoots) {
    lowest = std::min(lowest, r.root.imag());
    reach = std::max(reach, std::abs(r.root.real()) + 1);
    top = std::max(top, r.root.imag() + 1);
  }
  if (upperRoots.empty()) return 0;
  // The bottom edge sits between the real axis (and any lower roots) and
  // the lowest upper root.
  double bottom = lowest / 2;
  auto f = [&](Complex eta) {
    return std::exp(Complex(0, 1) * eta * theta) * std::pow(eta, j) / evalPoly(a, eta);
  };
  auto edge = [&](Complex from, Complex to) {
    Complex d = to - from;
    auto g = [&](double t) { return f(from + d * t) * d; };
    return gauss_kronrod<double, 61>::integrate(g, 0.0, 1.0, 12, 1e-13);
  };
  Complex p0(-reach, bottom), p1(reach, bottom), p2(reach, top), p3(-reach, top);
  return edge(p0, p1) + edge(p1, p2) + edge(p2, p3) + edge(p3, p0);
}

ProfileBasis profileBasis(const std::vector<CRat>& exact) {
  CRatPoly p(exact);
  if (p.degree() < 1) throw Error(ErrorCode::DegreeZero, "layer operator has no xin dependence");
  ProfileBasis basis;
  basis.symbol = toComplexPoly(p.coeffs());
  double scale = 1;
  std::vector<BasisRoot> all;
  for (const auto& [factor, mult] : squarefreeDecomposition(p)) {
    for (const auto& r : polyRoots(toComplexPoly(factor.coeffs()))) {
      all.push_back({r, mult});
      scale = std::max(scale, std::abs(r));
    }
  }
  for (const auto& r : all) {
    if (std::abs(r.root.imag()) < 1e-8 * scale)
      throw Error(ErrorCode::RealAxisRoot, "layer operator has a root on the real axis");
    if (r.root.imag() > 0) {
      basis.roots.push_back(r);
      basis.dimension += r.multiplicity;
    }
  }
  // Residues: a = (eta - r)^mu q, expanded at r.
  for (int j = 0; j < basis.dimension; ++j) {
    ExpPoly omega;
    for (const auto& br : basis.roots) {
      const int mu = br.multiplicity;
      ComplexPoly shifted = taylorShift(basis.symbol, br.root);
      std::vector<Complex> q(shifted.begin() + mu, shifted.end());
      auto inv = invertSeries(q, mu - 1);
      std::vector<Complex> num(mu, 0);
      // (r + w)^j
      Complex binom = 1;
      for (int k = 0; k <= std::min(j, mu - 1); ++k) {
        num[k] = binom * std::pow(br.root, j - k);
        binom = binom * static_cast<double>(j - k) / static_cast<double>(k + 1);
      }
      std::vector<Complex> s(mu, 0);
      for (int a = 0; a < mu; ++a)
        for (int b = 0; a + b < mu; ++b) s[a + b] += num[a] * inv[b];
      ExpPolyTerm term{br.root, std::vector<Complex>(mu)};
      Complex factorial = 1;
      for (int n = 0; n < mu; ++n) {
        if (n) factorial *= static_cast<double>(n);
        term.poly[n] = Complex(0, 2 * M_PI) * std::pow(Complex(0, 1), n) / factorial * s[mu - 1 - n];
      }
      omega.push_back(std::move(term));
    }
    basis.omega.push_back(std::move(omega));
  }
  for (int j = 0; j < basis.dimension; ++j)
    for (double theta : {0.0, 1.0, 5.0}) {
      Complex direct = omegaByQuadrature(basis.symbol, basis.roots, j, theta);
      basis.crossCheckError = std::max(basis.crossCheckError, std::abs(direct - evalExpPoly(basis.omega[j], theta)));
    }
  return basis;
}

ProfileBasis profileBasis(const LayerOperator& op, const std::vector<Rational>& zeta) {
  std::vector<Rational> z = zeta;
  if (op.orderZero) z.assign(op.symbol.nvars(), 0);
  return profileBasis(op.symbol.exactCoefficients(z));
}

}  // namespace blexpand
