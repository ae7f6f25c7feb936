#pragma once

#include <string>
#include <vector>

#include "blexpand/rational.hpp"
#include "blexpand/symbol_poly.hpp"

namespace blexpand {

struct PolygonPoint {
  int degree = 0;
  Rational valuation;
};

struct HullSegment {
  int startDegree = 0;
  int endDegree = 0;
  Rational slope;
  int length() const { return endDegree - startDegree; }
};

// Lower convex hull of the points, from the lowest to the highest degree.
// Collinear vertices are merged so consecutive slopes strictly increase.
std::vector<HullSegment> newtonPolygon(std::vector<PolygonPoint> points);

// Points (d, min eps-valuation of the xin^d coefficient) of a frozen symbol.
std::vector<PolygonPoint> polygonPoints(const FrozenPoly& frozen);

struct ExponentClass {
  Rational gamma;
  int multiplicity = 0;
  friend bool operator==(const ExponentClass&, const ExponentClass&) = default;
};

// Root-size pattern: `regularCount` roots stay bounded, the rest grow like
// eps^-gamma in the listed classes (increasing gamma).
struct ExponentPattern {
  int degree = 0;
  int regularCount = 0;
  std::vector<ExponentClass> classes;
  friend bool operator==(const ExponentPattern&, const ExponentPattern&) = default;
  std::string str() const;
};

// Positive slopes are singular classes; the lowest degree point and
// non-positive slopes contribute regular roots.
ExponentPattern patternFromHull(const std::vector<HullSegment>& hull, int lowestDegree, int degree);
ExponentPattern patternAt(const SymbolPoly& symbol, const std::vector<Rational>& zeta);

}  // namespace blexpand
