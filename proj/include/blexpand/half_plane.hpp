#pragma once

#include "blexpand/roots.hpp"

namespace blexpand {

struct HalfPlaneCount {
  int mPlus = 0;
  // Smallest |Im| over all roots.
  double margin = 0;
  // Independent count from the argument principle on a large upper
  // semicircle; always equals mPlus on return.
  int argumentCount = 0;
};

// Roots of p in Im > 0, counted with multiplicity. Throws RealAxisRoot when
// a root lies within tolerance * max(1, max|root|) of the real axis.
HalfPlaneCount upperHalfCount(const ComplexPoly& p, double tolerance = 1e-8);

// Winding of p along the closed contour through the given vertices
// (straight segments), divided by 2 pi. Steps never leave a disk on which p
// provably has no zero, so the accumulated log increments are exact up to
// rounding. Throws RealAxisRoot if the contour passes through a root.
double windingNumber(const ComplexPoly& p, const std::vector<Complex>& vertices);

// Winding of p around the boundary of the upper half disk of given radius.
double upperSemicircleWinding(const ComplexPoly& p, double radius);

}  // namespace blexpand
