#pragma once

#include <vector>

#include "blexpand/wkb.hpp"

namespace blexpand {

struct ReferenceSolution {
  double eps = 0;
  std::vector<double> x;
  std::vector<Complex> values;
  // Infinity-norm condition number of the row-equilibrated system for the
  // homogeneous coefficients.
  double condition = 0;
  std::vector<Complex> characteristicRoots;
};

// Exact solution of the constant-coefficient problem at fixed eps from its
// characteristic roots, in 50 significant digits: polynomial particular
// solution plus exponentials anchored at the endpoint where they are
// bounded. Throws IllConditioned when the condition number exceeds
// `maxCondition` or characteristic roots coincide.
ReferenceSolution referenceSolve(const Problem1D& problem, double eps, const std::vector<double>& grid,
                                 double maxCondition = 1e12);

}  // namespace blexpand
