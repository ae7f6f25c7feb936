#pragma once

#include <string>
#include <vector>

#include "blexpand/symbol_poly.hpp"

namespace blexpand {

struct EllipticityResult {
  bool pass = false;
  // A real zeta where the limit symbol at xin = 0 vanishes (approximately),
  // present when pass is false.
  std::vector<double> witness;
  std::string evidence;
};

// The limit symbol restricted to xin = 0, P(zeta), must have no real zero
// for |zeta| > radius and its top homogeneous part no zero on the unit
// sphere. Exact (Sturm sequences) in one tangential variable, sampled with
// local refinement in more.
EllipticityResult ellipticityCheck(const SymbolPoly& limit, double radius = 0);

}  // namespace blexpand
