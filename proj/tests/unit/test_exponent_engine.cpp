#include <gtest/gtest.h>

#include "blexpand/ellipticity.hpp"
#include "blexpand/error.hpp"
#include "blexpand/newton_polygon.hpp"
#include "blexpand/profile.hpp"
#include "qg_symbols.hpp"

using namespace blexpand;

namespace {

Rational q(long n, long d = 1) { return makeRational(n, d); }

}  // namespace

TEST(NewtonPolygon, MunkPoints) {
  auto hull = newtonPolygon({{1, q(0)}, {2, q(1)}, {4, q(1)}});
  auto p = patternFromHull(hull, 1, 4);
  ASSERT_EQ(p.classes.size(), 1u);
  EXPECT_EQ(p.classes[0].gamma, q(1, 3));
  EXPECT_EQ(p.classes[0].multiplicity, 3);
  EXPECT_EQ(p.regularCount, 1);
}

TEST(NewtonPolygon, StommelPoints) {
  auto hull = newtonPolygon({{1, q(0)}, {2, q(1, 4)}, {4, q(1)}});
  auto p = patternFromHull(hull, 1, 4);
  ASSERT_EQ(p.classes.size(), 2u);
  EXPECT_EQ(p.classes[0], (ExponentClass{q(1, 4), 1}));
  EXPECT_EQ(p.classes[1], (ExponentClass{q(3, 8), 2}));
}

TEST(NewtonPolygon, CollinearPointsMerge) {
  auto hull = newtonPolygon({{0, q(0)}, {1, q(1)}, {2, q(2)}, {3, q(3)}});
  ASSERT_EQ(hull.size(), 1u);
  EXPECT_EQ(hull[0].length(), 3);
  EXPECT_THROW(newtonPolygon({}), Error);
}

TEST(NewtonPolygon, EpsFreeHasNoSingularClass) {
  auto p = patternFromHull(newtonPolygon({{0, q(0)}, {2, q(0)}}), 0, 2);
  EXPECT_TRUE(p.classes.empty());
  EXPECT_EQ(p.regularCount, 2);
}

TEST(Profile, MunkWesternSlopeHalf) {
  auto prof = profileAt(qgtest::munk(true, q(1, 2)), defaultZetaSamples(1));
  ASSERT_EQ(prof.r(), 1);
  EXPECT_EQ(prof.classes[0].gamma, q(1, 3));
  EXPECT_EQ(prof.classes[0].multiplicity, 3);
  EXPECT_EQ(prof.regularCount, 1);
  EXPECT_EQ(prof.classes[0].beta, q(-4, 3));
  EXPECT_EQ(prof.classes[0].betaClosedForm, q(-4, 3));
  // Limit a0 = i - (1 + 1/4)^2 xin^3 after removing one xin.
  SymbolPoly expected = SymbolPoly::constant(1, CRat::imagUnit());
  expected.addTerm(0, 3, {0}, CRat(q(-25, 16)));
  EXPECT_EQ(prof.classes[0].limit, expected);
  EXPECT_EQ(prof.radius, 1.0);
}

TEST(Profile, StommelTwoClasses) {
  auto prof = profileAt(qgtest::stommel(true, q(0), q(1, 4)), defaultZetaSamples(1));
  ASSERT_EQ(prof.r(), 2);
  EXPECT_EQ(prof.classes[0].gamma, q(1, 4));
  EXPECT_EQ(prof.classes[0].multiplicity, 1);
  EXPECT_EQ(prof.classes[1].gamma, q(3, 8));
  EXPECT_EQ(prof.classes[1].multiplicity, 2);
  EXPECT_EQ(prof.regularCount, 1);
  EXPECT_EQ(prof.classes[0].beta, q(-1, 4));
  EXPECT_EQ(prof.classes[1].beta, q(-1, 2));
  // Friction limit -r - (1/Re) xin^2 after removing xin^2.
  SymbolPoly friction = SymbolPoly::constant(1, CRat(-1));
  friction.addTerm(0, 2, {0}, CRat(-1));
  EXPECT_EQ(prof.classes[1].limit, friction);
}

TEST(Profile, RegularSymbolHasEmptyClassList) {
  SymbolPoly lap = SymbolPoly::xin(1) * SymbolPoly::xin(1) + SymbolPoly::zeta(1, 0) * SymbolPoly::zeta(1, 0);
  auto prof = profileAt(lap, defaultZetaSamples(1));
  EXPECT_EQ(prof.r(), 0);
  EXPECT_EQ(prof.regularCount, 2);
}

TEST(Profile, DegenerateDiscPoint) {
  // At the disc point where the normal is along x2: xi1 = -zeta, xi2 = -xin.
  SymbolPoly z = SymbolPoly::zeta(1, 0), x = SymbolPoly::xin(1);
  SymbolPoly lap = z * z + x * x;
  SymbolPoly a = SymbolPoly::constant(1, CRat::imagUnit()) * SymbolPoly::epsPower(1, -1) * (-z) - lap - lap * lap;
  auto prof = profileAt(a, defaultZetaSamples(1));
  ASSERT_EQ(prof.r(), 1);
  EXPECT_EQ(prof.classes[0].gamma, q(1, 4));
  EXPECT_EQ(prof.classes[0].multiplicity, 4);
  EXPECT_EQ(prof.regularCount, 0);
  EXPECT_TRUE(prof.classes[0].limit.dependsOnZeta());
}

TEST(Profile, SamplesOfOneMagnitudeCannotShowUniformity) {
  SymbolPoly z = SymbolPoly::zeta(1, 0), x = SymbolPoly::xin(1);
  SymbolPoly a = x.pow(3) + SymbolPoly::epsPower(1, -1) * x + z;
  std::vector<std::vector<Rational>> samples{{q(1)}, {q(-1)}, {q(3, 2)}, {q(-3, 2)},
                                             {q(5, 4)}, {q(-5, 4)}, {q(7, 4)}, {q(-7, 4)}};
  try {
    profileAt(a, samples);
    FAIL() << "expected NonUniform";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NonUniform);
  }
  EXPECT_THROW(profileAt(a, {{q(2)}}), Error);
}

TEST(Profile, SpecialSamplesAreReplaced) {
  SymbolPoly z = SymbolPoly::zeta(1, 0), x = SymbolPoly::xin(1);
  // Coefficient of xin^0 vanishes exactly at zeta = 4.
  SymbolPoly a = x.pow(2) * SymbolPoly::epsPower(1, 1) + x + (z - SymbolPoly::constant(1, CRat(4))) *
                                                                   SymbolPoly::epsPower(1, -1);
  auto prof = profileAt(a, defaultZetaSamples(1));
  // Generic points (0,-1), (1,0), (2,1) are collinear: one class of size 2.
  EXPECT_EQ(prof.pattern().regularCount, 0);
  ASSERT_EQ(prof.r(), 1);
  EXPECT_EQ(prof.classes[0].multiplicity, 2);
  EXPECT_NE(prof.samples[2][0], q(4));
}

TEST(Ellipticity, OneVariableExamples) {
  auto mk = [](std::vector<long> coeffs) {
    SymbolPoly p(1);
    for (std::size_t k = 0; k < coeffs.size(); ++k) p.addTerm(0, 0, {static_cast<int>(k)}, CRat(coeffs[k]));
    return p;
  };
  auto r1 = ellipticityCheck(mk({-1, 0, 1}));  // zeta^2 - 1
  EXPECT_FALSE(r1.pass);
  ASSERT_EQ(r1.witness.size(), 1u);
  EXPECT_NEAR(std::abs(r1.witness[0]), 1.0, 1e-6);
  EXPECT_TRUE(ellipticityCheck(mk({-1, 0, 1}), 2.0).pass);
  EXPECT_TRUE(ellipticityCheck(mk({1, 0, 1})).pass);
  EXPECT_TRUE(ellipticityCheck(SymbolPoly::constant(1, CRat::imagUnit())).pass);
  EXPECT_THROW(ellipticityCheck(SymbolPoly::xin(1)), Error);
}

TEST(Ellipticity, ComplexCoefficientsNeedCommonRealZero) {
  // zeta^2 + i(zeta - 1): Re and Im vanish together only at... nowhere.
  SymbolPoly p(1);
  p.addTerm(0, 0, {2}, CRat(1));
  p.addTerm(0, 0, {1}, CRat(0, 1));
  p.addTerm(0, 0, {0}, CRat(0, -1));
  EXPECT_TRUE(ellipticityCheck(p).pass);
  // (zeta - 3)(zeta + i): common real zero at 3.
  SymbolPoly r(1);
  r.addTerm(0, 0, {2}, CRat(1));
  r.addTerm(0, 0, {1}, CRat(-3, 1));
  r.addTerm(0, 0, {0}, CRat(0, -3));
  auto res = ellipticityCheck(r);
  EXPECT_FALSE(res.pass);
  EXPECT_NEAR(res.witness.at(0), 3.0, 1e-6);
}

TEST(Ellipticity, TwoVariablesSphere) {
  SymbolPoly z1 = SymbolPoly::zeta(2, 0), z2 = SymbolPoly::zeta(2, 1);
  EXPECT_TRUE(ellipticityCheck(z1 * z1 + z2 * z2).pass);
  EXPECT_FALSE(ellipticityCheck(z1 * z1 - z2 * z2).pass);
}

TEST(Profile, QGClassLimitsAreElliptic) {
  // The Munk limit a0(zeta, 0) = i is a nonzero constant, and the friction
  // limit -1 as well; both pass (H2).
  auto prof = profileAt(qgtest::stommel(false, q(1, 3), q(1, 4)), defaultZetaSamples(1));
  for (const auto& c : prof.classes) EXPECT_TRUE(ellipticityCheck(c.limit, prof.radius).pass);
}
