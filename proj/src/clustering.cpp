#include "blexpand/clustering.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "blexpand/error.hpp"

namespace blexpand {

namespace {

std::vector<double> limitMagnitudes(const SymbolPoly& limit, const std::vector<Complex>& zeta) {
  auto coeffs = limit.evalEps(1.0, zeta);
  std::vector<double> out;
  ComplexPoly p = trimmed(coeffs);
  if (p.size() < 2) return out;
  for (const auto& r : polyRoots(p))
    if (std::abs(r) > 0) out.push_back(std::abs(r));
  return out;
}

}  // namespace

ClusterResult clusterRoots(const SymbolPoly& symbol, const SingularProfile& profile,
                           const std::vector<Complex>& zeta, double eps) {
  ClusterResult out;
  out.eps = eps;
  auto roots = polyRoots(symbol.evalEps(eps, zeta));
  std::sort(roots.begin(), roots.end(), [](Complex a, Complex b) { return std::abs(a) < std::abs(b); });
  const double L = std::log(1 / eps);

  // Predicted magnitudes, by class: bounded roots of limit0 for the regular
  // part, |mu| eps^-gamma for the singular classes.
  std::vector<std::vector<double>> predicted;
  std::vector<Rational> gammas{Rational(0)};
  std::vector<int> expected{profile.regularCount};
  predicted.push_back(limitMagnitudes(profile.limit0, zeta));
  for (const auto& c : profile.classes) {
    gammas.push_back(c.gamma);
    expected.push_back(c.multiplicity);
    std::vector<double> mags;
    for (double m : limitMagnitudes(c.limit, zeta)) mags.push_back(m * std::pow(eps, -c.gamma.get_d()));
    predicted.push_back(mags);
  }
  double regularCeiling = 1;
  for (double m : predicted[0]) regularCeiling = std::max(regularCeiling, m);

  std::size_t pos = 0;
  bool consistent = true;
  std::ostringstream ev;
  for (std::size_t j = 0; j < gammas.size(); ++j) {
    RootCluster c;
    c.gamma = gammas[j];
    c.expected = expected[j];
    double g = gammas[j].get_d();
    for (int k = 0; k < expected[j] && pos < roots.size(); ++k, ++pos) {
      Complex r = roots[pos];
      c.roots.push_back(r);
      double a = std::abs(r);
      double exponent = a > 0 ? std::log(a) / L : -INFINITY;
      double slack = j == 0 ? std::max(0.0, exponent) : std::abs(exponent - g);
      c.slack = std::max(c.slack, slack);
      // Nearest predicted magnitude over all classes must belong to this one.
      bool ok;
      if (j == 0) {
        ok = a <= std::exp(0.5) * regularCeiling;
      } else {
        double best = INFINITY;
        std::size_t bestClass = 0;
        for (std::size_t i = 0; i < predicted.size(); ++i)
          for (double mval : predicted[i]) {
            double d = std::abs(std::log(a) - std::log(mval));
            if (d < best) best = d, bestClass = i;
          }
        ok = bestClass == j && best <= 0.5;
      }
      if (!ok) {
        consistent = false;
        ev << "root " << r << " (rank " << pos << ") not near a magnitude predicted for class " << j << "; ";
      }
    }
    out.fittedDelta = std::max(out.fittedDelta, c.slack);
    out.clusters.push_back(std::move(c));
  }
  if (pos != roots.size()) throw Error(ErrorCode::Internal, "root count differs from the profile degree");
  out.consistent = consistent;
  if (consistent) ev << "all roots within a factor e^0.5 of their predicted magnitudes";
  out.evidence = ev.str();
  return out;
}

ClusterSweep clusterSweep(const SymbolPoly& symbol, const SingularProfile& profile,
                          const std::vector<Complex>& zeta, const std::vector<double>& epsGrid) {
  if (epsGrid.empty()) throw Error(ErrorCode::InvalidArgument, "empty eps grid");
  ClusterSweep sweep;
  for (double e : epsGrid) sweep.results.push_back(clusterRoots(symbol, profile, zeta, e));
  std::vector<std::size_t> order(epsGrid.size());
  for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
  std::sort(order.begin(), order.end(), [&](auto a, auto b) { return epsGrid[a] < epsGrid[b]; });
  if (!sweep.results[order.front()].consistent)
    throw Error(ErrorCode::ClusterViolation,
                "roots at eps = " + std::to_string(epsGrid[order.front()]) + " do not match the predicted annuli: " +
                    sweep.results[order.front()].evidence);
  for (auto k : order) {
    if (!sweep.results[k].consistent) break;
    sweep.eps0 = epsGrid[k];
  }
  return sweep;
}

}  // namespace blexpand
