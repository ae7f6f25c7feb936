#pragma once

#include <optional>
#include <vector>

#include "blexpand/newton_polygon.hpp"
#include "blexpand/symbol_poly.hpp"

namespace blexpand {

struct SingularClass {
  Rational gamma;
  int multiplicity = 0;
  // Exact minimum valuation of a(zeta, xin / eps^gamma).
  Rational beta;
  // M - m*gamma + sum over faster classes of (gamma - gamma_k); differs from
  // `beta` when the polygon vertex at the class start is not a hull corner
  // reached through every faster class.
  Rational betaClosedForm;
  // Number of xin factors removed from the eps -> 0 limit.
  int prefixDegree = 0;
  // Limit symbol with the xin^prefixDegree factor removed; degree =
  // multiplicity in xin.
  SymbolPoly limit;
};

struct SingularProfile {
  int nvars = 0;
  int degree = 0;
  Rational leadingValuation;  // eps-valuation of the xin^m coefficient
  int regularCount = 0;
  std::vector<SingularClass> classes;
  // eps -> 0 limit at the symbol's minimum valuation (bounded roots).
  SymbolPoly limit0;
  // Dyadic radius beyond which every sampled zeta gave the same pattern.
  double radius = 0;
  // Samples actually used after special-point replacement.
  std::vector<std::vector<Rational>> samples;

  int r() const { return static_cast<int>(classes.size()); }
  ExponentPattern pattern() const;
};

struct ProfileOptions {
  int minSamples = 8;
  int replacementAttempts = 8;
};

// Standard zeta samples: +-2^k for nvars = 1, points on dyadic circles with
// rational directions for nvars = 2, signed coordinate sweeps otherwise.
std::vector<std::vector<Rational>> defaultZetaSamples(int nvars);

// Exponent profile of the symbol, uniform over the sampled zeta.
// Throws NonUniform when the pattern does not stabilise over the samples.
SingularProfile profileAt(const SymbolPoly& symbol, const std::vector<std::vector<Rational>>& zetaSamples,
                          const ProfileOptions& options = {});

}  // namespace blexpand
