#include "blexpand/ellipticity.hpp"

#include <cmath>
#include <complex>
#include <random>
#include <sstream>

#include "blexpand/error.hpp"
#include "blexpand/exact_poly.hpp"

namespace blexpand {

namespace {

using Terms = std::vector<std::pair<std::vector<int>, std::complex<double>>>;

std::complex<double> evalTerms(const Terms& terms, const std::vector<double>& z) {
  std::complex<double> acc = 0;
  for (const auto& [deg, c] : terms) {
    std::complex<double> v = c;
    for (std::size_t k = 0; k < z.size(); ++k) v *= std::pow(z[k], deg[k]);
    acc += v;
  }
  return acc;
}

EllipticityResult checkOneVariable(const SymbolPoly& p0, double radius) {
  EllipticityResult res;
  std::vector<Rational> re, im;
  int top = -1;
  for (const auto& [k, c] : p0.terms()) {
    int d = k.zdeg[0];
    if (d >= static_cast<int>(re.size())) {
      re.resize(d + 1, 0);
      im.resize(d + 1, 0);
    }
    re[d] += c.re();
    im[d] += c.im();
    top = std::max(top, d);
  }
  RatPoly pr(re), pi(im);
  RatPoly g = RatPoly::gcd(pr, pi);
  int total = 0;
  if (g.degree() >= 1) {
    Rational r = rationalFromDouble(radius);
    Rational b = rootBound(g) + 1;
    if (r < b) total = countRealRoots(g, r, b) + countRealRoots(g, -b, -r);
    if (total > 0) {
      for (const auto& root : isolateRealRoots(g, makeRational(1, 1 << 30))) {
        if (abs(root) > r) {
          res.witness = {root.get_d()};
          break;
        }
      }
    }
  }
  std::ostringstream os;
  os << "P has degree " << top << " in zeta1; " << total << " real zero(s) with |zeta1| > " << radius;
  res.evidence = os.str();
  res.pass = total == 0;
  return res;
}

EllipticityResult checkSphere(const SymbolPoly& p0, double radius) {
  const int n = p0.nvars();
  int topDegree = 0;
  for (const auto& [k, c] : p0.terms()) {
    int d = 0;
    for (int z : k.zdeg) d += z;
    topDegree = std::max(topDegree, d);
  }
  Terms top;
  for (const auto& [k, c] : p0.terms()) {
    int d = 0;
    for (int z : k.zdeg) d += z;
    if (d == topDegree) top.push_back({k.zdeg, c.toComplex()});
  }
  std::vector<std::vector<double>> dirs;
  if (n == 2) {
    const int count = 2048;
    for (int k = 0; k < count; ++k) {
      double t = 2 * M_PI * k / count;
      dirs.push_back({std::cos(t), std::sin(t)});
    }
  } else {
    std::mt19937_64 rng(12345);
    std::normal_distribution<double> nd;
    for (int k = 0; k < 20000; ++k) {
      std::vector<double> v(n);
      double s = 0;
      for (auto& x : v) {
        x = nd(rng);
        s += x * x;
      }
      for (auto& x : v) x /= std::sqrt(s);
      dirs.push_back(v);
    }
  }
  double maxAbs = 0, minAbs = INFINITY;
  std::vector<double> best;
  for (const auto& d : dirs) {
    double a = std::abs(evalTerms(top, d));
    maxAbs = std::max(maxAbs, a);
    if (a < minAbs) {
      minAbs = a;
      best = d;
    }
  }
  // Local refinement of the smallest value by shrinking coordinate steps.
  double step = n == 2 ? 2 * M_PI / 2048 : 0.05;
  for (int iter = 0; iter < 200 && step > 1e-14; ++iter) {
    bool improved = false;
    for (int k = 0; k < n; ++k) {
      for (double sgnStep : {step, -step}) {
        std::vector<double> v = best;
        v[k] += sgnStep;
        double s = 0;
        for (double x : v) s += x * x;
        for (double& x : v) x /= std::sqrt(s);
        double a = std::abs(evalTerms(top, v));
        if (a < minAbs) {
          minAbs = a;
          best = v;
          improved = true;
        }
      }
    }
    if (!improved) step /= 2;
  }
  EllipticityResult res;
  res.pass = minAbs > 1e-9 * maxAbs;
  if (!res.pass) res.witness = best;
  std::ostringstream os;
  os << "top homogeneous part (degree " << topDegree << ") min/max on the unit sphere = " << minAbs / maxAbs
     << "; radius " << radius;
  res.evidence = os.str();
  return res;
}

}  // namespace

EllipticityResult ellipticityCheck(const SymbolPoly& limit, double radius) {
  SymbolPoly p0 = limit.xinCoefficient(0);
  if (p0.isZero()) throw Error(ErrorCode::ZeroPolynomial, "limit symbol vanishes identically at xin = 0");
  for (const auto& [k, c] : p0.terms())
    if (k.e != 0) throw Error(ErrorCode::InvalidArgument, "ellipticity check needs an eps-free limit symbol");
  if (p0.nvars() == 0) return {true, {}, "P is the nonzero constant " + p0.str()};
  if (p0.nvars() == 1) return checkOneVariable(p0, radius);
  return checkSphere(p0, radius);
}

}  // namespace blexpand
