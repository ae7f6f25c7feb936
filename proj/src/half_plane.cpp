#include "blexpand/half_plane.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "blexpand/error.hpp"

namespace blexpand {

namespace {

// Radius of a disk around z0 free of zeros: the positive root of
// |c0| = sum_{k>=1} |c_k| rho^k for the Taylor coefficients at z0.
double rootFreeRadius(const ComplexPoly& p, Complex z0) {
  ComplexPoly c = taylorShift(p, z0);
  double c0 = std::abs(c[0]);
  if (c0 == 0) return 0;
  auto f = [&](double rho) {
    double s = 0, pw = rho;
    for (std::size_t k = 1; k < c.size(); ++k) {
      s += std::abs(c[k]) * pw;
      pw *= rho;
    }
    return s - c0;
  };
  double lo = 0, hi = 1;
  while (f(hi) < 0) {
    lo = hi;
    hi *= 2;
  }
  if (lo == 0) {
    while (hi > 1e-300 && f(hi / 2) >= 0) hi /= 2;
    lo = hi / 2;
  }
  for (int it = 0; it < 60; ++it) {
    double mid = (lo + hi) / 2;
    (f(mid) < 0 ? lo : hi) = mid;
  }
  return lo;
}

void accumulateArg(const ComplexPoly& p, Complex a, Complex b, double& argSum) {
  const double length = std::abs(b - a);
  if (length == 0) return;
  Complex dir = (b - a) / length;
  double t = 0;
  Complex z = a;
  Complex pz = evalPoly(p, z);
  int steps = 0;
  while (t < length) {
    double rho = rootFreeRadius(p, z);
    if (!(rho > 1e-15 * std::max(1.0, std::abs(z))))
      throw Error(ErrorCode::RealAxisRoot, "contour passes through a root");
    double h = std::min(rho / 2, length - t);
    t += h;
    Complex next = t >= length ? b : a + dir * t;
    Complex pn = evalPoly(p, next);
    argSum += std::arg(pn / pz);
    z = next;
    pz = pn;
    if (++steps > 10000000) throw Error(ErrorCode::Internal, "argument principle stepping did not terminate");
  }
}

}  // namespace

double windingNumber(const ComplexPoly& p, const std::vector<Complex>& vertices) {
  ComplexPoly q = trimmed(p);
  double argSum = 0;
  for (std::size_t k = 0; k < vertices.size(); ++k)
    accumulateArg(q, vertices[k], vertices[(k + 1) % vertices.size()], argSum);
  return argSum / (2 * M_PI);
}

double upperSemicircleWinding(const ComplexPoly& p, double radius) {
  // The arc is polygonised finely enough that it stays outside the disk of
  // radius radius * cos(pi / n), which holds no roots when radius is twice a
  // root bound.
  const int n = 64;
  std::vector<Complex> vertices;
  for (int k = 0; k <= n; ++k) vertices.push_back(std::polar(radius, M_PI * k / n));
  return windingNumber(p, vertices);
}

HalfPlaneCount upperHalfCount(const ComplexPoly& input, double tolerance) {
  ComplexPoly p = trimmed(input);
  auto roots = polyRoots(p);
  HalfPlaneCount out;
  double scale = 1, margin = INFINITY;
  for (const auto& r : roots) {
    scale = std::max(scale, std::abs(r));
    margin = std::min(margin, std::abs(r.imag()));
  }
  out.margin = margin;
  if (margin < tolerance * scale) {
    std::ostringstream os;
    os << "root within " << margin << " of the real axis";
    throw Error(ErrorCode::RealAxisRoot, os.str());
  }
  for (const auto& r : roots)
    if (r.imag() > 0) ++out.mPlus;
  double w = upperSemicircleWinding(p, 2 * std::max(rootModulusBound(p), 1.0));
  long rounded = std::lround(w);
  if (std::abs(w - static_cast<double>(rounded)) > 0.25 || rounded != out.mPlus) {
    std::ostringstream os;
    os << "root count " << out.mPlus << " disagrees with argument principle " << w;
    throw Error(ErrorCode::Internal, os.str());
  }
  out.argumentCount = static_cast<int>(rounded);
  return out;
}

}  // namespace blexpand
