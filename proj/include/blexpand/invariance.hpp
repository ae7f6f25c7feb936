#pragma once

#include <random>
#include <string>
#include <vector>

#include "blexpand/profile.hpp"

namespace blexpand {

// y' = tangential * x' + shear * xn,  yn = normalScale * xn.
struct AffineChartMap {
  std::vector<std::vector<Rational>> tangential;  // nvars x nvars, invertible
  std::vector<Rational> shear;                    // nvars
  Rational normalScale{1};                        // > 0
};

struct InvarianceResult {
  bool pass = false;
  ExponentPattern before, after;
  std::string evidence;
};

// Symbol of the same operator written in the new coordinates: frequencies
// transform with the transpose, zeta -> tangential^T zeta and
// xin -> shear . zeta + normalScale * xin.
SymbolPoly pushForward(const SymbolPoly& a, const AffineChartMap& map);

// Profiles of a and of its push-forward must have identical patterns.
InvarianceResult affineInvarianceCheck(const SymbolPoly& a, const AffineChartMap& map);

// Random symbol built as a product of factors (eps^gamma xin - lambda(zeta))
// with elliptic lambda, plus regular factors; satisfies the uniformity and
// ellipticity assumptions by construction.
SymbolPoly randomLayeredSymbol(std::mt19937& rng, int nvars);
AffineChartMap randomChartMap(std::mt19937& rng, int nvars);

}  // namespace blexpand
