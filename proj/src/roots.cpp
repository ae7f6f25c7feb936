#include "blexpand/roots.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

#include "blexpand/error.hpp"

namespace blexpand {

namespace {

// Diagonal similarity by powers of two equalising row and column norms.
void balance(Eigen::MatrixXcd& a) {
  const int n = static_cast<int>(a.rows());
  bool done = false;
  while (!done) {
    done = true;
    for (int i = 0; i < n; ++i) {
      double c = 0, r = 0;
      for (int j = 0; j < n; ++j) {
        if (j == i) continue;
        c += std::abs(a(j, i));
        r += std::abs(a(i, j));
      }
      if (c == 0 || r == 0) continue;
      double f = 1, s = c + r;
      while (c < r / 2) {
        c *= 2;
        r /= 2;
        f *= 2;
      }
      while (c >= r * 2) {
        c /= 2;
        r *= 2;
        f /= 2;
      }
      if ((c + r) < 0.95 * s) {
        done = false;
        a.row(i) /= f;
        a.col(i) *= f;
      }
    }
  }
}

}  // namespace

Complex evalPoly(const ComplexPoly& p, Complex z) {
  Complex acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * z + *it;
  return acc;
}

ComplexPoly derivative(const ComplexPoly& p) {
  ComplexPoly d;
  for (std::size_t k = 1; k < p.size(); ++k) d.push_back(p[k] * static_cast<double>(k));
  return d;
}

ComplexPoly taylorShift(const ComplexPoly& p, Complex z0) {
  ComplexPoly c = p;
  const int n = static_cast<int>(c.size());
  for (int k = 0; k < n; ++k)
    for (int j = n - 2; j >= k; --j) c[j] += z0 * c[j + 1];
  return c;
}

ComplexPoly trimmed(ComplexPoly p) {
  while (!p.empty() && p.back() == Complex(0)) p.pop_back();
  return p;
}

double rootModulusBound(const ComplexPoly& p) {
  ComplexPoly q = trimmed(p);
  const int n = static_cast<int>(q.size()) - 1;
  if (n < 1) return 0;
  double bound = 0;
  for (int k = 0; k < n; ++k) {
    double r = std::abs(q[k] / q[n]);
    if (r == 0) continue;
    double term = std::pow(k == 0 ? r / 2 : r, 1.0 / (n - k));
    bound = std::max(bound, term);
  }
  return 2 * bound;
}

double relativeResidual(const ComplexPoly& p, Complex z) {
  double scale = 0, az = std::abs(z), pw = 1;
  for (const auto& c : p) {
    scale += std::abs(c) * pw;
    pw *= az;
  }
  return scale > 0 ? std::abs(evalPoly(p, z)) / scale : 0;
}

std::vector<Complex> polyRoots(const ComplexPoly& input) {
  ComplexPoly p = trimmed(input);
  if (p.size() < 2) throw Error(ErrorCode::DegreeZero, "polynomial of degree < 1 has no roots to find");
  for (const auto& c : p)
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
      throw Error(ErrorCode::InvalidArgument, "non-finite polynomial coefficient");
  std::vector<Complex> roots;
  std::size_t zeros = 0;
  while (p[zeros] == Complex(0)) ++zeros;
  roots.assign(zeros, Complex(0));
  ComplexPoly q(p.begin() + static_cast<long>(zeros), p.end());
  const int n = static_cast<int>(q.size()) - 1;
  if (n == 0) return roots;

  // Scale z = s w so the rescaled polynomial has roots of order one.
  double s = rootModulusBound(q) / 2;
  if (!(s > 0) || !std::isfinite(s)) s = 1;
  ComplexPoly w(q.size());
  double pw = 1;
  for (int k = 0; k <= n; ++k) {
    w[k] = q[k] * pw;
    pw *= s;
  }
  Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(n, n);
  for (int k = 0; k < n; ++k) companion(0, k) = -w[n - 1 - k] / w[n];
  for (int k = 1; k < n; ++k) companion(k, k - 1) = 1;
  balance(companion);
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
  if (solver.info() != Eigen::Success) throw Error(ErrorCode::Internal, "companion eigenvalue solver failed");

  ComplexPoly dq = derivative(q);
  for (int k = 0; k < n; ++k) {
    Complex z = solver.eigenvalues()[k] * s;
    double res = relativeResidual(q, z);
    for (int it = 0; it < 5; ++it) {
      Complex d = evalPoly(dq, z);
      if (d == Complex(0)) break;
      Complex next = z - evalPoly(q, z) / d;
      double r2 = relativeResidual(q, next);
      if (!(r2 < res)) break;
      z = next;
      res = r2;
    }
    roots.push_back(z);
  }
  return roots;
}

}  // namespace blexpand
