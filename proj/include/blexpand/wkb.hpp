#pragma once

#include <string>
#include <vector>

#include "blexpand/dsl/spec_file.hpp"
#include "blexpand/layer.hpp"
#include "blexpand/roots.hpp"
#include "blexpand/symbol_poly.hpp"

namespace blexpand {

// u^(order)(endpoint) = value, derivative in the global coordinate.
struct TraceCondition {
  int order = 0;
  Complex value;
};

struct Endpoint {
  std::string id;
  double x = 0;
  bool left = true;
  std::vector<TraceCondition> conditions;
};

// P(eps, D) u = eps^forcingEps f(x) on (left.x, right.x), D = -i d/dx.
// The symbol has no tangential variables; xin stands for the global xi.
struct Problem1D {
  std::string name;
  SymbolPoly symbol{0};
  std::vector<Complex> forcing;  // ascending powers of x
  Rational forcingEps{0};
  Endpoint left, right;
};

Problem1D problemFromSpec(const dsl::OperatorSpec& spec);

// One Fourier mode of a straight-coast strip problem.
struct ModeProblem {
  std::string kind;  // sin, cos or exp
  Rational wavenumber;
  Complex amplitude;
  Problem1D problem;
};
// Requires straight coasts (chi constant, dchi = 0); UnsupportedGeometry
// otherwise.
std::vector<ModeProblem> stripModes(const dsl::OperatorSpec& spec);

// sum_p poly[p] theta^p exp(i root theta), one block per decaying root.
struct LayerTerm {
  std::string component;
  bool left = true;
  double origin = 0;
  Rational gamma;
  int classIndex = 0;  // 1-based
  int mPlus = 0;
  std::vector<ExpPoly> orders;  // v^n, n = 0..K
};

struct TraceBookkeeping {
  int conditions = 0;
  int interiorConstants = 0;
  std::vector<std::pair<std::string, int>> absorbed;  // endpoint id, layer unknowns
  std::string str() const;
};

struct CompositeExpansion {
  int order = 0;  // K: terms rho^0 .. rho^K
  int rhoDenominator = 1;  // rho = eps^(1/rhoDenominator)
  double left = 0, right = 1;
  double cutoffT = 1.0;  // plateau [0, T/4), support [0, T/2)
  std::vector<std::vector<Complex>> interior;  // u^n as ascending polynomials in x
  std::vector<LayerTerm> layers;
  TraceBookkeeping bookkeeping;

  Complex evaluate(double x, double eps, int derivative = 0) const;
  Complex evaluateInterior(double x, double eps, int derivative = 0) const;
};

// Quintic smoothstep cutoff of the distance d: 1 on [0, T/4], 0 from T/2 on.
double cutoff(double d, double T, int derivative = 0);

// Interior hierarchy with a single-derivative reduced operator, layer
// hierarchies at both endpoints, and trace systems solved order by order.
// Throws UnderdeterminedHierarchy / OverdeterminedHierarchy when the
// condition count differs from interior constants plus layer unknowns,
// SingularTraceSystem when the leading trace system is singular.
CompositeExpansion solveHierarchy1D(const Problem1D& problem, int K);

}  // namespace blexpand
