#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "blexpand/dsl/ast.hpp"
#include "blexpand/dsl/elaborate.hpp"
#include "blexpand/symbol_poly.hpp"

namespace blexpand::dsl {

enum class CurveKind { Point, Graph, Circle, Flat };

struct BoundarySpec {
  std::string id;
  CurveKind curve = CurveKind::Flat;
  std::string side;  // left/right (point), west/east (graph), inner (circle), or empty
  ExprPtr at;        // point position
  ExprPtr chi;       // graph x1 = chi(s)
  ExprPtr dchi;      // chi'(s)
  ExprPtr radius;    // circle radius (default 1)
  std::vector<std::pair<std::string, ExprPtr>> chart;  // xiK overrides
  std::vector<ExprPtr> samples;
  SourceSpan span;
};

struct TraceSpec {
  int order = 0;  // derivative order in the global coordinate
  ExprPtr value;
};

struct BoundaryConditionSpec {
  std::string component;
  std::vector<TraceSpec> conditions;
};

struct ModeSpec {
  std::string kind;  // sin, cos or exp (exp(i k x2))
  ExprPtr wavenumber;
  ExprPtr amplitude;
};

struct ProblemSpec {
  std::string kind;  // bvp1d or qg-strip
  ExprPtr forcing;
  ExprPtr forcingEps;  // forcing carries eps^forcingEps
  std::vector<ModeSpec> modes;
};

// Recorded claim about a layer, compared against the computed root count.
struct LayerClaim {
  std::string component;
  int classIndex = 0;  // 1-based, in increasing gamma
  bool isLayer = false;
};

struct OperatorSpec {
  std::string name;
  std::string title;
  int order = 0;
  int nvars = 0;
  ExprPtr expr;
  std::vector<std::pair<std::string, ExprPtr>> params;
  std::vector<BoundarySpec> boundaries;
  std::vector<ExprPtr> zetaSamples;
  std::optional<ProblemSpec> problem;
  std::vector<BoundaryConditionSpec> bcs;
  std::vector<LayerClaim> claims;

  const BoundarySpec& boundary(const std::string& id) const;
};

// Sectioned text format; see docs/spec-format.md.
OperatorSpec parseSpec(std::string_view text);
std::string printSpec(const OperatorSpec& spec);
bool structurallyEqual(const OperatorSpec& a, const OperatorSpec& b);

// Parameters evaluated in declaration order (later ones may use earlier).
std::map<std::string, Scalar> evaluateParams(const OperatorSpec& spec);

// Boundary parameter values listed for a component.
std::vector<Scalar> boundarySamples(const OperatorSpec& spec, const std::string& component);

// Frozen symbol in the boundary chart of `component` at parameter s:
// polynomial in (eps, xin, zeta1..zeta_nvars).
SymbolPoly elaborateAtSample(const OperatorSpec& spec, const std::string& component, const Scalar& s);

// Symbol with explicit images for xi1..xi_{nvars+1}.
SymbolPoly elaborateWithImages(const OperatorSpec& spec, const std::vector<SymbolPoly>& xiImages,
                               const std::map<std::string, Scalar>& extraScalars = {});

std::vector<std::vector<Rational>> zetaSamples(const OperatorSpec& spec);

}  // namespace blexpand::dsl
