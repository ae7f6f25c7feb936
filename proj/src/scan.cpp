#include "blexpand/scan.hpp"

#include <cmath>
#include <map>
#include <numbers>
#include <sstream>

#include "blexpand/ellipticity.hpp"
#include "blexpand/error.hpp"
#include "blexpand/parallel.hpp"

namespace blexpand {

namespace {

using dsl::Scalar;

SampleAnalysis analyzeSample(const dsl::OperatorSpec& spec, const std::string& component, const Scalar& s,
                             const std::vector<std::vector<Rational>>& zetaGrid, bool withOperators) {
  SampleAnalysis out;
  out.parameter = s.str();
  out.value = s.toDouble();
  SymbolPoly a = dsl::elaborateAtSample(spec, component, s);
  try {
    out.profile = profileAt(a, zetaGrid);
    out.pattern = out.profile->pattern().str();
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NonUniform) throw;
    out.pattern = "non-uniform";
    return out;
  }
  if (withOperators) {
    try {
      out.operators = singularOperators(*out.profile, component, zetaGrid);
    } catch (const Error& e) {
      out.operatorError = e.what();
    }
  }
  return out;
}

TurningPoint bisect(const dsl::OperatorSpec& spec, const std::string& component, Scalar lo, Scalar hi,
                    std::string loPattern, std::string hiPattern, const std::vector<std::vector<Rational>>& zetaGrid,
                    double tolerance) {
  TurningPoint tp;
  tp.before = loPattern;
  tp.after = hiPattern;
  while (std::abs(hi.toDouble() - lo.toDouble()) > tolerance) {
    Scalar mid = (lo + hi) / Scalar::exact(2);
    std::string p = analyzeSample(spec, component, mid, zetaGrid, false).pattern;
    if (p == loPattern) {
      lo = mid;
    } else if (p == hiPattern) {
      hi = mid;
    } else {
      // a third pattern inside the bracket: keep the half next to the low end
      hi = mid;
      hiPattern = p;
    }
  }
  tp.parameter = 0.5 * (lo.toDouble() + hi.toDouble());
  tp.bracket = std::abs(hi.toDouble() - lo.toDouble());
  return tp;
}

std::string join(const std::vector<std::string>& items, const char* sep = ", ") {
  std::string s;
  for (std::size_t k = 0; k < items.size(); ++k) s += (k ? sep : "") + items[k];
  return s;
}

}  // namespace

const char* statusName(Check::Status s) {
  switch (s) {
    case Check::Status::Pass: return "pass";
    case Check::Status::Fail: return "fail";
    case Check::Status::NotAssessed: return "not assessed";
  }
  return "not assessed";
}

bool HypothesisReport::anyFailure() const {
  for (const auto& c : components)
    if (c.h1.failed() || c.h2.failed() || c.h3.failed() || c.h4.failed()) return true;
  return h5.failed();
}

ComponentReport scanComponent(const dsl::OperatorSpec& spec, const std::string& component, double turningTolerance) {
  ComponentReport rep;
  rep.component = component;
  const dsl::BoundarySpec& boundary = spec.boundary(component);
  const auto params = dsl::boundarySamples(spec, component);
  const auto zetaGrid = dsl::zetaSamples(spec);
  rep.samples = parallelMap<SampleAnalysis>(
      params.size(), [&](std::size_t k) { return analyzeSample(spec, component, params[k], zetaGrid, true); });
  const std::size_t n = rep.samples.size();

  // (H1)
  std::vector<std::string> nonUniform;
  double radius = 0;
  for (const auto& s : rep.samples) {
    if (!s.profile)
      nonUniform.push_back(s.parameter);
    else
      radius = std::max(radius, s.profile->radius);
  }
  if (nonUniform.empty()) {
    std::ostringstream os;
    os << "exponent pattern independent of zeta at all " << n << " samples for |zeta| > " << radius;
    rep.h1 = Check::pass(os.str());
  } else {
    rep.h1 = Check::fail("pattern varies with zeta at s = " + join(nonUniform));
  }

  // (H2)
  std::vector<std::string> h2Failures;
  int checked = 0;
  for (const auto& s : rep.samples) {
    if (!s.profile) continue;
    for (std::size_t j = 0; j < s.profile->classes.size(); ++j) {
      ++checked;
      try {
        EllipticityResult e = ellipticityCheck(s.profile->classes[j].limit, s.profile->radius);
        if (!e.pass) h2Failures.push_back("class " + std::to_string(j + 1) + " at s = " + s.parameter + ": " + e.evidence);
      } catch (const Error& e) {
        h2Failures.push_back("class " + std::to_string(j + 1) + " at s = " + s.parameter + ": " + e.what());
      }
    }
  }
  if (!h2Failures.empty())
    rep.h2 = Check::fail(join(h2Failures, "; "));
  else if (checked == 0)
    rep.h2 = Check::pass("no singular class at any uniform sample");
  else
    rep.h2 = Check::pass("limit factors at xin = 0 elliptic for all " + std::to_string(checked) + " class samples");

  // (H3) and turning points
  std::map<std::string, int> patternCount;
  for (const auto& s : rep.samples) ++patternCount[s.pattern];
  if (patternCount.size() == 1) {
    rep.h3 = Check::pass(rep.samples.front().pattern + " at all " + std::to_string(n) + " samples");
  } else {
    std::vector<std::string> parts;
    for (const auto& [p, c] : patternCount) parts.push_back(p + " at " + std::to_string(c) + " samples");
    rep.h3 = Check::fail("pattern changes along the component: " + join(parts, "; "));

    struct Pair {
      std::size_t a, b;
      bool wrap;
    };
    std::vector<Pair> pairs;
    for (std::size_t k = 0; k + 1 < n; ++k)
      if (rep.samples[k].pattern != rep.samples[k + 1].pattern) pairs.push_back({k, k + 1, false});
    if (boundary.curve == dsl::CurveKind::Circle && n > 2 && rep.samples[n - 1].pattern != rep.samples[0].pattern)
      pairs.push_back({n - 1, 0, true});
    auto found = parallelMap<TurningPoint>(pairs.size(), [&](std::size_t k) {
      Scalar lo = params[pairs[k].a];
      Scalar hi = pairs[k].wrap ? params[pairs[k].b] + Scalar::piTimes(2) : params[pairs[k].b];
      return bisect(spec, component, lo, hi, rep.samples[pairs[k].a].pattern, rep.samples[pairs[k].b].pattern,
                    zetaGrid, turningTolerance);
    });
    for (auto tp : found) {
      if (boundary.curve == dsl::CurveKind::Circle) tp.parameter = std::fmod(tp.parameter, 2 * std::numbers::pi);
      bool merged = false;
      for (const auto& t : rep.turningPoints) merged |= std::abs(t.parameter - tp.parameter) <= 2 * turningTolerance;
      if (!merged) rep.turningPoints.push_back(tp);
    }
  }

  // (H4)
  if (rep.h3.failed() || !rep.samples.front().profile) {
    rep.h4 = Check::notAssessed("needs a pattern that is uniform along the component");
    return rep;
  }
  std::vector<std::string> errors;
  for (const auto& s : rep.samples)
    if (!s.operatorError.empty()) errors.push_back("s = " + s.parameter + ": " + s.operatorError);
  if (!errors.empty()) {
    rep.h4 = Check::fail(join(errors, "; "));
    return rep;
  }
  const auto& first = rep.samples.front();
  if (first.operators.empty()) {
    rep.h4 = Check::fail("no singular exponent");
    return rep;
  }
  std::vector<std::string> problems;
  bool unsupported = false;
  for (std::size_t j = 0; j < first.operators.size(); ++j) {
    LayerOperator op = first.operators[j];
    for (const auto& s : rep.samples) {
      const LayerOperator& other = s.operators[j];
      if (!(other.symbol == op.symbol)) op.constantCoefficients = false;
      if (other.mPlus != op.mPlus || other.mPlus < 0) {
        std::ostringstream os;
        os << errorCodeName(ErrorCode::NonConstantMPlus) << ": class " << j + 1 << " has m+ = " << op.mPlus
           << " at s = " << first.parameter << " and m+ = " << other.mPlus << " at s = " << s.parameter;
        if (other.mPlus < 0 || op.mPlus < 0) os << " (-1: varies over zeta)";
        problems.push_back(os.str());
        break;
      }
    }
    LayerExponent le;
    le.classIndex = static_cast<int>(j) + 1;
    le.gamma = op.gamma;
    le.mPlus = op.mPlus;
    le.symbol = op.symbol.str();
    try {
      le.isLayer = isBoundaryLayerExponent(op);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::UnsupportedOperatorClass) throw;
      unsupported = true;
      problems.push_back(std::string("class ") + std::to_string(j + 1) + ": " + e.what());
    }
    rep.exponents.push_back(le);
  }
  int layers = 0;
  for (const auto& e : rep.exponents) layers += e.isLayer;
  if (!problems.empty()) {
    rep.h4 = unsupported ? Check::notAssessed(join(problems, "; ")) : Check::fail(join(problems, "; "));
  } else if (layers == 0) {
    rep.h4 = Check::fail("no singular exponent has a decaying layer profile (all m+ = 0)");
  } else {
    std::vector<std::string> parts;
    for (const auto& e : rep.exponents)
      parts.push_back("gamma " + e.gamma.get_str() + ": m+ = " + std::to_string(e.mPlus) +
                      (e.isLayer ? " (layer)" : " (no layer)"));
    rep.h4 = Check::pass(join(parts, "; "));
  }
  return rep;
}

HypothesisReport analyzeSpec(const dsl::OperatorSpec& spec) {
  HypothesisReport rep;
  rep.spec = spec.name;
  rep.title = spec.title;
  for (const auto& b : spec.boundaries) rep.components.push_back(scanComponent(spec, b.id));
  rep.h5 = spec.problem ? Check::notAssessed("evaluated by the expansion solver")
                        : Check::notAssessed("no boundary value problem attached");
  for (const auto& claim : spec.claims) {
    ClaimCheck cc;
    cc.claim = claim;
    const ComponentReport* comp = nullptr;
    for (const auto& c : rep.components)
      if (c.component == claim.component) comp = &c;
    if (!comp) throw Error(ErrorCode::InvalidArgument, "claim names unknown component '" + claim.component + "'");
    for (const auto& e : comp->exponents)
      if (e.classIndex == claim.classIndex) cc.computed = e.isLayer;
    std::ostringstream os;
    os << "layer." << claim.component << "." << claim.classIndex << " claimed " << (claim.isLayer ? "yes" : "no");
    if (!cc.computed) {
      os << "; no such class was computed";
    } else {
      const auto& e = comp->exponents[claim.classIndex - 1];
      os << "; gamma " << e.gamma.get_str() << " has m+ = " << e.mPlus << " so the root count says "
         << (*cc.computed ? "yes" : "no");
      cc.agrees = *cc.computed == claim.isLayer;
    }
    cc.evidence = os.str();
    if (!cc.agrees) rep.notes.push_back("recorded claim disagrees with root counts: " + cc.evidence);
    rep.claims.push_back(cc);
  }
  return rep;
}

}  // namespace blexpand
