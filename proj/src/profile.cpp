#include "blexpand/profile.hpp"

#include <cmath>
#include <map>
#include <set>
#include <sstream>

#include "blexpand/error.hpp"

namespace blexpand {

namespace {

double magnitude(const std::vector<Rational>& zeta) {
  double s = 0;
  for (const auto& z : zeta) s += z.get_d() * z.get_d();
  return std::sqrt(s);
}

// A sample is special when some coefficient loses its generic valuation
// through exact cancellation at that zeta.
bool isSpecial(const FrozenPoly& frozen, const std::map<int, Rational>& generic) {
  for (const auto& [d, v] : generic) {
    auto it = frozen.find(d);
    if (it == frozen.end() || it->second.begin()->first != v) return true;
  }
  return false;
}

std::string sampleText(const std::vector<Rational>& zeta) {
  std::ostringstream os;
  os << "(";
  for (std::size_t k = 0; k < zeta.size(); ++k) os << (k ? ", " : "") << zeta[k].get_str();
  os << ")";
  return os.str();
}

}  // namespace

ExponentPattern SingularProfile::pattern() const {
  ExponentPattern p;
  p.degree = degree;
  p.regularCount = regularCount;
  for (const auto& c : classes) p.classes.push_back({c.gamma, c.multiplicity});
  return p;
}

std::vector<std::vector<Rational>> defaultZetaSamples(int nvars) {
  std::vector<std::vector<Rational>> out;
  if (nvars == 0) return out;
  for (int k = 1; k <= 4; ++k) {
    Rational r(1 << k);
    if (nvars == 1) {
      out.push_back({r});
      out.push_back({-r});
    } else if (nvars == 2) {
      out.push_back({r, 0});
      out.push_back({r * makeRational(-3, 5), r * makeRational(4, 5)});
      out.push_back({0, -r});
      out.push_back({r * makeRational(5, 13), r * makeRational(-12, 13)});
    } else {
      for (int v = 0; v < nvars; ++v) {
        std::vector<Rational> z(nvars, 0);
        z[v] = (v % 2) ? Rational(-r) : r;
        out.push_back(z);
      }
      std::vector<Rational> d(nvars, 0);
      d[0] = r * makeRational(3, 5);
      d[1] = r * makeRational(-4, 5);
      out.push_back(d);
    }
  }
  return out;
}

SingularProfile profileAt(const SymbolPoly& symbol, const std::vector<std::vector<Rational>>& zetaSamples,
                          const ProfileOptions& options) {
  if (symbol.isZero()) throw Error(ErrorCode::EmptyPolynomial, "profile of the zero symbol");
  const int nvars = symbol.nvars();
  const int m = symbol.xinDegree();
  if (m < 1) throw Error(ErrorCode::DegreeZero, "symbol has no xin dependence");

  std::map<int, Rational> generic;
  for (int d = 0; d <= m; ++d) {
    try {
      generic.emplace(d, symbol.valuationAtDegree(d));
    } catch (const Error&) {
    }
  }

  SingularProfile prof;
  prof.nvars = nvars;
  prof.degree = m;
  prof.leadingValuation = symbol.valuationAtDegree(m);

  ExponentPattern pattern;
  if (nvars == 0) {
    pattern = patternAt(symbol, {});
  } else {
    if (static_cast<int>(zetaSamples.size()) < options.minSamples)
      throw Error(ErrorCode::InvalidArgument, "need at least " + std::to_string(options.minSamples) +
                                                  " zeta samples, got " + std::to_string(zetaSamples.size()));
    std::vector<ExponentPattern> patterns;
    std::vector<double> mags;
    for (const auto& sample : zetaSamples) {
      if (static_cast<int>(sample.size()) != nvars) throw Error(ErrorCode::InvalidArgument, "zeta sample arity");
      std::vector<Rational> z = sample;
      FrozenPoly f = symbol.frozen(z);
      for (int k = 1; k <= options.replacementAttempts && isSpecial(f, generic); ++k) {
        std::vector<Rational> moved = sample;
        for (int i = 0; i < nvars; ++i) moved[i] *= 1 + makeRational(k + i, 61);
        FrozenPoly g = symbol.frozen(moved);
        if (!isSpecial(g, generic)) {
          z = moved;
          f = std::move(g);
        }
      }
      auto pts = polygonPoints(f);
      if (pts.empty()) throw Error(ErrorCode::NonUniform, "symbol vanishes at zeta = " + sampleText(z));
      patterns.push_back(patternFromHull(newtonPolygon(pts), pts.front().degree, pts.back().degree));
      mags.push_back(magnitude(z));
      prof.samples.push_back(z);
    }
    std::size_t top = 0;
    for (std::size_t k = 1; k < mags.size(); ++k)
      if (mags[k] > mags[top]) top = k;
    pattern = patterns[top];
    double radius = -1;
    double minMag = mags[0];
    for (std::size_t k = 0; k < mags.size(); ++k) {
      minMag = std::min(minMag, mags[k]);
      if (!(patterns[k] == pattern)) radius = std::max(radius, std::exp2(std::ceil(std::log2(mags[k]))));
    }
    if (radius < 0) radius = std::exp2(std::ceil(std::log2(minMag)) - 1);
    std::set<long> dyadic;
    for (std::size_t k = 0; k < mags.size(); ++k)
      if (mags[k] > radius) dyadic.insert(static_cast<long>(std::floor(std::log2(mags[k]))));
    if (dyadic.size() < 2)
      throw Error(ErrorCode::NonUniform, "exponent pattern does not stabilise over the zeta samples (pattern " +
                                             pattern.str() + " only seen beyond radius " +
                                             std::to_string(radius) + ")");
    prof.radius = radius;
  }
  if (pattern.degree != m)
    throw Error(ErrorCode::NonUniform, "leading xin coefficient vanishes at the samples");

  prof.regularCount = pattern.regularCount;
  int suffix = 0;
  for (const auto& c : pattern.classes) suffix += c.multiplicity;
  for (std::size_t j = 0; j < pattern.classes.size(); ++j) {
    const auto& c = pattern.classes[j];
    SingularClass sc;
    sc.gamma = c.gamma;
    sc.multiplicity = c.multiplicity;
    sc.beta = symbol.rescale(c.gamma, 0).minValuation();
    Rational closed = prof.leadingValuation - Rational(m) * c.gamma;
    for (std::size_t k = j + 1; k < pattern.classes.size(); ++k) closed += c.gamma - pattern.classes[k].gamma;
    sc.betaClosedForm = closed;
    sc.prefixDegree = m - suffix;
    SymbolPoly full = symbol.rescale(c.gamma, sc.beta).limitEpsZero();
    if (full.minXinDegree() != sc.prefixDegree || full.xinDegree() != sc.prefixDegree + sc.multiplicity)
      throw Error(ErrorCode::Internal, "limit symbol degrees disagree with the Newton polygon");
    sc.limit = full.divideXinPower(sc.prefixDegree);
    suffix -= c.multiplicity;
    prof.classes.push_back(std::move(sc));
  }
  prof.limit0 = symbol.rescale(0, symbol.minValuation()).limitEpsZero();
  return prof;
}

}  // namespace blexpand
