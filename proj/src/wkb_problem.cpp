#include "blexpand/wkb.hpp"

#include <optional>

#include "blexpand/error.hpp"

namespace blexpand {

namespace {

using dsl::Scalar;

std::vector<TraceCondition> conditionsFor(const dsl::OperatorSpec& spec, const std::string& id,
                                          const std::map<std::string, Scalar>& params) {
  dsl::Environment env;
  env.allowEps = false;
  env.scalars = params;
  std::vector<TraceCondition> out;
  for (const auto& bc : spec.bcs)
    if (bc.component == id)
      for (const auto& c : bc.conditions) out.push_back({c.order, dsl::evaluateScalar(*c.value, env).toDouble()});
  return out;
}

Rational forcingExponent(const dsl::ProblemSpec& p, const std::map<std::string, Scalar>& params) {
  if (!p.forcingEps) return 0;
  dsl::Environment env;
  env.allowEps = false;
  env.scalars = params;
  return dsl::evaluateScalar(*p.forcingEps, env).toRational();
}

}  // namespace

Problem1D problemFromSpec(const dsl::OperatorSpec& spec) {
  if (!spec.problem || spec.problem->kind != "bvp1d")
    throw Error(ErrorCode::InvalidArgument, "spec '" + spec.name + "' has no bvp1d problem");
  if (spec.nvars != 0) throw Error(ErrorCode::InvalidArgument, "bvp1d needs nvars = 0");
  const auto params = dsl::evaluateParams(spec);
  Problem1D p;
  p.name = spec.name;
  p.symbol = dsl::elaborateWithImages(spec, {SymbolPoly::xin(0)});
  if (p.symbol.xinDegree() != spec.order)
    throw Error(ErrorCode::Structural, "declared order does not match the symbol");
  bool haveLeft = false, haveRight = false;
  for (const auto& b : spec.boundaries) {
    if (b.curve != dsl::CurveKind::Point) throw Error(ErrorCode::InvalidArgument, "bvp1d boundaries must be points");
    Endpoint e;
    e.id = b.id;
    e.left = b.side == "left";
    e.x = dsl::boundarySamples(spec, b.id).front().toDouble();
    e.conditions = conditionsFor(spec, b.id, params);
    (e.left ? haveLeft : haveRight) = true;
    (e.left ? p.left : p.right) = e;
  }
  if (!haveLeft || !haveRight || spec.boundaries.size() != 2)
    throw Error(ErrorCode::InvalidArgument, "bvp1d needs one left and one right endpoint");
  dsl::Environment env;
  env.allowEps = false;
  env.scalars = params;
  env.symbols["x"] = SymbolPoly::xin(0);
  SymbolPoly f = spec.problem->forcing ? dsl::evaluateSymbol(*spec.problem->forcing, env) : SymbolPoly(0);
  for (const auto& c : f.exactCoefficients({})) p.forcing.push_back(c.toComplex());
  p.forcingEps = forcingExponent(*spec.problem, params);
  return p;
}

std::vector<ModeProblem> stripModes(const dsl::OperatorSpec& spec) {
  if (!spec.problem || spec.problem->kind != "qg-strip")
    throw Error(ErrorCode::InvalidArgument, "spec '" + spec.name + "' has no qg-strip problem");
  if (spec.nvars != 1) throw Error(ErrorCode::InvalidArgument, "qg-strip needs nvars = 1");
  const auto params = dsl::evaluateParams(spec);
  dsl::Environment env;
  env.allowEps = false;
  env.scalars = params;

  Endpoint west, east;
  int found = 0;
  for (const auto& b : spec.boundaries) {
    if (b.curve != dsl::CurveKind::Graph || (b.side != "west" && b.side != "east"))
      throw Error(ErrorCode::Unsupported, "unsupported geometry: strip expansions need graph coasts");
    std::optional<double> position;
    for (const auto& s : dsl::boundarySamples(spec, b.id)) {
      env.scalars["s"] = s;
      double chi = dsl::evaluateScalar(*b.chi, env).toDouble();
      double dchi = dsl::evaluateScalar(*b.dchi, env).toDouble();
      if (dchi != 0 || (position && *position != chi))
        throw Error(ErrorCode::Unsupported,
                    "unsupported geometry: coast '" + b.id + "' is curved; expansions need straight coasts");
      position = chi;
    }
    Endpoint& e = b.side == "west" ? west : east;
    e.id = b.id;
    e.left = b.side == "west";
    e.x = *position;
    e.conditions = conditionsFor(spec, b.id, params);
    ++found;
  }
  if (found != 2 || west.id.empty() || east.id.empty())
    throw Error(ErrorCode::InvalidArgument, "qg-strip needs one west and one east coast");

  env.scalars.erase("s");
  std::vector<ModeProblem> out;
  for (const auto& m : spec.problem->modes) {
    ModeProblem mp;
    mp.kind = m.kind;
    mp.wavenumber = dsl::evaluateScalar(*m.wavenumber, env).toRational();
    mp.amplitude = dsl::evaluateScalar(*m.amplitude, env).toDouble();
    auto symbolAt = [&](const Rational& k) {
      return dsl::elaborateWithImages(spec, {SymbolPoly::xin(0), SymbolPoly::constant(0, CRat(k))});
    };
    Problem1D& p = mp.problem;
    p.name = spec.name + " mode " + m.kind + "(" + mp.wavenumber.get_str() + " x2)";
    p.symbol = symbolAt(mp.wavenumber);
    if (m.kind != "exp" && !(p.symbol == symbolAt(-mp.wavenumber)))
      throw Error(ErrorCode::Unsupported, "sin/cos modes need a symbol even in xi2; use exp modes");
    p.forcing = {mp.amplitude};
    p.forcingEps = forcingExponent(*spec.problem, params);
    p.left = west;
    p.right = east;
    out.push_back(std::move(mp));
  }
  if (out.empty()) throw Error(ErrorCode::InvalidArgument, "qg-strip problem lists no forcing mode");
  return out;
}

}  // namespace blexpand
