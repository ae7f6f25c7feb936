#include <gtest/gtest.h>

#include <chrono>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include "blexpand/invariance.hpp"
#include "blexpand/scan.hpp"
#include "qg_symbols.hpp"

using namespace blexpand;

namespace {

dsl::OperatorSpec loadSpec(const std::string& name) {
  std::ifstream in(std::string(BLEXPAND_SPEC_DIR) + "/" + name);
  std::stringstream ss;
  ss << in.rdbuf();
  return dsl::parseSpec(ss.str());
}

const std::string kMunkPattern = "m=4 regular=1 classes=[(1/3 x3)]";

}  // namespace

TEST(Scan, MunkStripPassesWithWesternTwoEasternOne) {
  HypothesisReport rep = analyzeSpec(loadSpec("qg_munk.spec"));
  ASSERT_EQ(rep.components.size(), 2u);
  for (const auto& c : rep.components) {
    EXPECT_EQ(c.h1.status, Check::Status::Pass) << c.h1.evidence;
    EXPECT_EQ(c.h2.status, Check::Status::Pass) << c.h2.evidence;
    EXPECT_EQ(c.h3.status, Check::Status::Pass) << c.h3.evidence;
    EXPECT_EQ(c.h4.status, Check::Status::Pass) << c.h4.evidence;
    for (const auto& s : c.samples) EXPECT_EQ(s.pattern, kMunkPattern);
    ASSERT_EQ(c.exponents.size(), 1u);
    EXPECT_EQ(c.exponents[0].gamma, makeRational(1, 3));
  }
  EXPECT_EQ(rep.components[0].exponents[0].mPlus, 2);
  EXPECT_EQ(rep.components[1].exponents[0].mPlus, 1);
  EXPECT_FALSE(rep.anyFailure());
}

TEST(Scan, StommelClaimsAreComparedWithRootCounts) {
  HypothesisReport rep = analyzeSpec(loadSpec("qg_stommel.spec"));
  for (const auto& c : rep.components) {
    ASSERT_EQ(c.exponents.size(), 2u) << c.h3.evidence;
    EXPECT_EQ(c.exponents[0].gamma, makeRational(1, 4));
    EXPECT_EQ(c.exponents[1].gamma, makeRational(3, 8));
    EXPECT_EQ(c.exponents[1].mPlus, 1);
  }
  EXPECT_EQ(rep.components[0].exponents[0].mPlus + rep.components[1].exponents[0].mPlus, 1);
  int disagreements = 0;
  for (const auto& cc : rep.claims) disagreements += !cc.agrees;
  EXPECT_EQ(disagreements, 2);
  EXPECT_EQ(rep.notes.size(), 2u);
}

TEST(Scan, DiscTurningPointsAtZonalCoast) {
  auto t0 = std::chrono::steady_clock::now();
  HypothesisReport rep = analyzeSpec(loadSpec("qg_disc.spec"));
  const auto& c = rep.components.at(0);
  EXPECT_EQ(c.h3.status, Check::Status::Fail);
  EXPECT_EQ(c.h4.status, Check::Status::NotAssessed);
  ASSERT_EQ(c.turningPoints.size(), 2u);
  EXPECT_NEAR(c.turningPoints[0].parameter, std::numbers::pi / 2, 1e-4);
  EXPECT_NEAR(c.turningPoints[1].parameter, 3 * std::numbers::pi / 2, 1e-4);
  for (const auto& s : c.samples) {
    bool pole = s.parameter == "1/2*pi" || s.parameter == "3/2*pi";
    EXPECT_EQ(s.pattern, pole ? "m=4 regular=0 classes=[(1/4 x4)]" : kMunkPattern) << s.parameter;
  }
  EXPECT_TRUE(rep.anyFailure());
  EXPECT_LT(std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count(), 10.0);
}

TEST(Scan, OneDimensionalEndpoints) {
  HypothesisReport rep = analyzeSpec(loadSpec("ode_munk.spec"));
  EXPECT_EQ(rep.components[0].exponents.at(0).mPlus, 2);
  EXPECT_EQ(rep.components[1].exponents.at(0).mPlus, 1);
  rep = analyzeSpec(loadSpec("ode1.spec"));
  EXPECT_EQ(rep.components[0].exponents.at(0).gamma, Rational(1));
  EXPECT_TRUE(rep.components[0].exponents[0].isLayer);
  EXPECT_FALSE(rep.components[1].exponents[0].isLayer);
  EXPECT_EQ(rep.components[1].h4.status, Check::Status::Fail);
}

TEST(Scan, ConstantEllipticSymbolHasNoExponent) {
  auto spec = dsl::parseSpec(
      "[operator]\norder = 2\nnvars = 1\nexpr = xi1^2 + xi2^2\n[boundary.b]\ncurve = flat\nsamples = 0, 1, 2\n");
  ComponentReport c = scanComponent(spec, "b");
  EXPECT_EQ(c.h3.status, Check::Status::Pass);
  EXPECT_EQ(c.samples[0].profile->r(), 0);
  EXPECT_EQ(c.samples[0].profile->regularCount, 2);
}

TEST(Invariance, IdentityAndRotationScaling) {
  SymbolPoly munk = qgtest::munk(true, makeRational(1, 2));
  AffineChartMap id{{{1}}, {0}, 1};
  EXPECT_TRUE(affineInvarianceCheck(munk, id).pass);
  AffineChartMap flipScale{{{-1}}, {0}, 2};
  auto r = affineInvarianceCheck(munk, flipScale);
  EXPECT_TRUE(r.pass) << r.evidence;
  EXPECT_EQ(r.after.str(), kMunkPattern);
  AffineChartMap shear{{{1}}, {1}, 1};
  r = affineInvarianceCheck(qgtest::stommel(true, 0, makeRational(1, 4)), shear);
  EXPECT_TRUE(r.pass) << r.evidence;
  EXPECT_EQ(r.after.str(), "m=4 regular=1 classes=[(1/4 x1), (3/8 x2)]");
}

TEST(Invariance, RandomTrials) {
  std::mt19937 rng(20240601);
  for (int t = 0; t < 50; ++t) {
    int nvars = 1 + t % 2;
    SymbolPoly a = randomLayeredSymbol(rng, nvars);
    AffineChartMap map = randomChartMap(rng, nvars);
    auto r = affineInvarianceCheck(a, map);
    EXPECT_TRUE(r.pass) << t << ": " << r.evidence;
  }
}
