#pragma once

#include <string>
#include <vector>

#include "blexpand/scan.hpp"
#include "blexpand/validate.hpp"
#include "blexpand/wkb.hpp"

namespace blexpand {

// Composite expansions for the problem section of a spec: one for bvp1d,
// one per forcing mode for qg-strip.
struct SpecExpansion {
  std::vector<ModeProblem> modes;
  std::vector<CompositeExpansion> composites;
};

std::vector<ModeProblem> specModes(const dsl::OperatorSpec& spec);
SpecExpansion expandSpec(const dsl::OperatorSpec& spec, int K);
ValidationResult validateSpec(const dsl::OperatorSpec& spec, int K, const std::vector<double>& epsGrid);

// (H5) from the order-0 trace bookkeeping: pass when every mode's condition
// count matches its unknowns and the leading trace system is invertible.
// Not assessed without a problem section or for unsupported geometry.
Check assessH5(const dsl::OperatorSpec& spec);

// analyzeSpec plus (H5).
HypothesisReport analyzeWithH5(const dsl::OperatorSpec& spec);

}  // namespace blexpand
