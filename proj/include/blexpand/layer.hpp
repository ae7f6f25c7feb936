#pragma once

#include <string>
#include <vector>

#include "blexpand/half_plane.hpp"
#include "blexpand/profile.hpp"

namespace blexpand {

// Leading-order boundary-layer operator of one singular class, as a
// polynomial in xin (and zeta when the class limit depends on it).
struct LayerOperator {
  std::string component;
  int classIndex = 0;
  Rational gamma;
  SymbolPoly symbol;
  bool orderZero = true;  // no zeta dependence
  // Identical symbol at every sample of the component; required to treat a
  // zeta-dependent operator mode by mode.
  bool constantCoefficients = true;
  // Roots in the upper half plane; -1 if it varies over the zeta grid.
  int mPlus = -1;
  std::vector<int> mPlusByZeta;
  double margin = 0;
};

std::vector<LayerOperator> singularOperators(const SingularProfile& profile, const std::string& component,
                                             const std::vector<std::vector<Rational>>& zetaGrid);

// True iff the operator has decaying profiles (mPlus >= 1, uniformly over
// the zeta grid for zeta-dependent operators).
bool isBoundaryLayerExponent(const LayerOperator& op);

struct BasisRoot {
  Complex root;
  int multiplicity = 1;
};

// sum_p poly[p] theta^p exp(i root theta)
struct ExpPolyTerm {
  Complex root;
  std::vector<Complex> poly;
};
using ExpPoly = std::vector<ExpPolyTerm>;
Complex evalExpPoly(const ExpPoly& f, double theta);

struct ProfileBasis {
  ComplexPoly symbol;
  std::vector<BasisRoot> roots;  // upper half plane, distinct
  int dimension = 0;
  // omega_j(theta) = contour integral of exp(i eta theta) eta^j / a(eta)
  // around the upper roots, j = 0..dimension-1, from residues.
  std::vector<ExpPoly> omega;
  // Max |residue value - adaptive contour quadrature| over theta in {0,1,5}.
  double crossCheckError = 0;
};

// Decaying solutions theta^p exp(i eta_k theta) of a(D_theta) v = 0. Root
// multiplicities come from an exact squarefree decomposition.
ProfileBasis profileBasis(const LayerOperator& op, const std::vector<Rational>& zeta = {});
ProfileBasis profileBasis(const std::vector<CRat>& exactSymbol);

// Contour integral of exp(i eta theta) eta^j / a(eta) over a rectangle
// enclosing the upper-half-plane roots, by adaptive Gauss-Kronrod.
Complex omegaByQuadrature(const ComplexPoly& a, const std::vector<BasisRoot>& upperRoots, int j, double theta);

}  // namespace blexpand
