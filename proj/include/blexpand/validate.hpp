#pragma once

#include <string>
#include <vector>

#include "blexpand/wkb.hpp"

namespace blexpand {

struct ValidationRow {
  double eps = 0;
  double supError = 0;
  // |eps^-v (P(eps, D) u - eps^p f)| on the grid, v the symbol's valuation
  double interiorResidual = 0;
  // trace misfits, each scaled by eps^(gamma j) for a derivative of order j
  // at an endpoint whose fastest layer has exponent gamma
  double bcResidual = 0;
  double condition = 0;  // reference system
};

struct ValidationResult {
  std::string problem;
  int order = 0;
  double predictedOrder = 0;  // (K + 1) / rho denominator
  std::vector<ValidationRow> rows;
  // Least-squares slope of log error against log eps; NaN when every
  // error is exactly zero.
  double fittedOrder = 0;
  bool exact = false;
};

// "a:b:n": n values from a to b, geometric.
std::vector<double> parseEpsGrid(const std::string& text);

// 1001 uniform points plus points clustered at each layer's scale.
std::vector<double> validationGrid(const CompositeExpansion& comp, double eps);

double fitOrder(const std::vector<double>& eps, const std::vector<double>& errors);

// Order-K composite against the extended-precision reference at each eps.
ValidationResult validate(const Problem1D& problem, int K, const std::vector<double>& epsGrid);

// Strip problems: the x2 factors have modulus at most one, so errors and
// residuals are summed over modes.
ValidationResult validateModes(const std::string& name, const std::vector<ModeProblem>& modes, int K,
                               const std::vector<double>& epsGrid);

}  // namespace blexpand
