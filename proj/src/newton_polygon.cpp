#include "blexpand/newton_polygon.hpp"

#include <algorithm>
#include <sstream>

#include "blexpand/error.hpp"

namespace blexpand {

namespace {

// Cross product of (b - a) x (c - a); <= 0 means b is not strictly below ac.
Rational cross(const PolygonPoint& a, const PolygonPoint& b, const PolygonPoint& c) {
  return Rational(b.degree - a.degree) * (c.valuation - a.valuation) -
         (b.valuation - a.valuation) * Rational(c.degree - a.degree);
}

}  // namespace

std::vector<HullSegment> newtonPolygon(std::vector<PolygonPoint> points) {
  if (points.empty()) throw Error(ErrorCode::EmptyPolynomial, "Newton polygon of an empty point set");
  std::sort(points.begin(), points.end(), [](const auto& a, const auto& b) {
    return a.degree != b.degree ? a.degree < b.degree : a.valuation < b.valuation;
  });
  std::vector<PolygonPoint> unique;
  for (const auto& p : points)
    if (unique.empty() || unique.back().degree != p.degree) unique.push_back(p);
  std::vector<PolygonPoint> hull;
  for (const auto& p : unique) {
    while (hull.size() >= 2 && sgn(cross(hull[hull.size() - 2], hull.back(), p)) <= 0) hull.pop_back();
    hull.push_back(p);
  }
  std::vector<HullSegment> segments;
  for (std::size_t k = 0; k + 1 < hull.size(); ++k) {
    Rational slope = (hull[k + 1].valuation - hull[k].valuation) / Rational(hull[k + 1].degree - hull[k].degree);
    segments.push_back({hull[k].degree, hull[k + 1].degree, slope});
  }
  return segments;
}

std::vector<PolygonPoint> polygonPoints(const FrozenPoly& frozen) {
  std::vector<PolygonPoint> pts;
  for (const auto& [d, byE] : frozen)
    if (!byE.empty()) pts.push_back({d, byE.begin()->first});
  return pts;
}

ExponentPattern patternFromHull(const std::vector<HullSegment>& hull, int lowestDegree, int degree) {
  ExponentPattern p;
  p.degree = degree;
  p.regularCount = lowestDegree;
  for (const auto& s : hull) {
    if (sgn(s.slope) > 0)
      p.classes.push_back({s.slope, s.length()});
    else
      p.regularCount += s.length();
  }
  return p;
}

ExponentPattern patternAt(const SymbolPoly& symbol, const std::vector<Rational>& zeta) {
  auto pts = polygonPoints(symbol.frozen(zeta));
  if (pts.empty()) throw Error(ErrorCode::EmptyPolynomial, "symbol vanishes at the sample");
  auto hull = newtonPolygon(pts);
  int lowest = pts.front().degree;
  return patternFromHull(hull, lowest, pts.back().degree);
}

std::string ExponentPattern::str() const {
  std::ostringstream os;
  os << "m=" << degree << " regular=" << regularCount << " classes=[";
  for (std::size_t k = 0; k < classes.size(); ++k)
    os << (k ? ", " : "") << "(" << classes[k].gamma.get_str() << " x" << classes[k].multiplicity << ")";
  os << "]";
  return os.str();
}

}  // namespace blexpand
