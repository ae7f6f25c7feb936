#pragma once

#include <string>
#include <vector>

#include "blexpand/profile.hpp"
#include "blexpand/roots.hpp"

namespace blexpand {

struct RootCluster {
  // 0 for the bounded (regular) roots.
  Rational gamma;
  int expected = 0;
  std::vector<Complex> roots;
  // Smallest delta with every root in eps^(-gamma+delta) <= |root| <= eps^(-gamma-delta).
  double slack = 0;
};

struct ClusterResult {
  double eps = 0;
  std::vector<RootCluster> clusters;
  // max slack over all clusters
  double fittedDelta = 0;
  // Every root sits within a factor e^0.5 of a magnitude predicted by the
  // limit symbols, and that prediction agrees with the magnitude ranking.
  bool consistent = false;
  std::string evidence;
};

// Roots of the frozen symbol at numeric (eps, zeta), partitioned by
// magnitude rank into the profile's regular part and singular classes.
ClusterResult clusterRoots(const SymbolPoly& symbol, const SingularProfile& profile,
                           const std::vector<Complex>& zeta, double eps);

struct ClusterSweep {
  std::vector<ClusterResult> results;  // in the order of the eps grid
  // Largest grid eps below which every tested eps was consistent; 0 if none.
  double eps0 = 0;
};

// Throws ClusterViolation when the smallest eps of the grid is inconsistent.
ClusterSweep clusterSweep(const SymbolPoly& symbol, const SingularProfile& profile,
                          const std::vector<Complex>& zeta, const std::vector<double>& epsGrid);

}  // namespace blexpand
