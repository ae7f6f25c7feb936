#include <gtest/gtest.h>

#include <cmath>
#include <fstream>
#include <functional>
#include <sstream>

#include "blexpand/error.hpp"
#include "blexpand/reference.hpp"
#include "blexpand/validate.hpp"
#include "blexpand/wkb.hpp"

using namespace blexpand;

namespace {

std::string readSpec(const std::string& name) {
  std::ifstream in(std::string(BLEXPAND_SPEC_DIR) + "/" + name);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Problem1D loadProblem(const std::string& name) { return problemFromSpec(dsl::parseSpec(readSpec(name))); }

std::string ode1WithBc(const std::string& left, const std::string& right, const std::string& forcing = "1") {
  return "[operator]\nname = t\norder = 2\nnvars = 0\nexpr = -eps*xi1^2 + i*xi1\n"
         "[boundary.left]\ncurve = point\nside = left\nat = 0\n"
         "[boundary.right]\ncurve = point\nside = right\nat = 1\n"
         "[problem]\nkind = bvp1d\nforcing = " +
         forcing + "\n[bc.left]\n" + left + "[bc.right]\n" + right;
}

ErrorCode codeOf(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::Internal;
}

}  // namespace

TEST(Wkb, Ode1LeadingComposite) {
  CompositeExpansion comp = solveHierarchy1D(loadProblem("ode1.spec"), 0);
  ASSERT_EQ(comp.interior.size(), 1u);
  ASSERT_GE(comp.interior[0].size(), 2u);
  EXPECT_NEAR(std::abs(comp.interior[0][0] - Complex(-1)), 0, 1e-14);
  EXPECT_NEAR(std::abs(comp.interior[0][1] - Complex(1)), 0, 1e-14);
  ASSERT_EQ(comp.layers.size(), 1u);
  EXPECT_TRUE(comp.layers[0].left);
  EXPECT_EQ(comp.layers[0].gamma, Rational(1));
  EXPECT_EQ(comp.layers[0].mPlus, 1);
  const double eps = 1e-3;
  for (double x : {0.0, 1e-4, 1e-3, 5e-3, 0.1, 0.2, 0.6, 1.0}) {
    double phi = cutoff(x, comp.cutoffT);
    Complex expect = x - 1 + phi * std::exp(-x / eps);
    EXPECT_NEAR(std::abs(comp.evaluate(x, eps) - expect), 0, 1e-13) << x;
  }
}

TEST(Wkb, CutoffShape) {
  EXPECT_EQ(cutoff(0.1, 1.0), 1.0);
  EXPECT_EQ(cutoff(0.25, 1.0), 1.0);
  EXPECT_EQ(cutoff(0.5, 1.0), 0.0);
  EXPECT_NEAR(cutoff(0.375, 1.0), 0.5, 1e-15);
  for (int k = 1; k <= 2; ++k) {
    EXPECT_EQ(cutoff(0.25, 1.0, k), 0.0);
    EXPECT_EQ(cutoff(0.5, 1.0, k), 0.0);
  }
  double h = 1e-6;
  EXPECT_NEAR(cutoff(0.3, 1.0, 1), (cutoff(0.3 + h, 1.0) - cutoff(0.3 - h, 1.0)) / (2 * h), 1e-6);
}

TEST(Wkb, MunkAnalogBookkeeping) {
  CompositeExpansion comp = solveHierarchy1D(loadProblem("ode_munk.spec"), 1);
  EXPECT_EQ(comp.rhoDenominator, 3);
  EXPECT_EQ(comp.bookkeeping.conditions, 4);
  EXPECT_EQ(comp.bookkeeping.interiorConstants, 1);
  ASSERT_EQ(comp.bookkeeping.absorbed.size(), 2u);
  EXPECT_EQ(comp.bookkeeping.absorbed[0], std::make_pair(std::string("left"), 2));
  EXPECT_EQ(comp.bookkeeping.absorbed[1], std::make_pair(std::string("right"), 1));
  // the first-order interior equation takes its condition at the single-root end
  EXPECT_NEAR(std::abs(comp.evaluateInterior(1.0, 1e-9)), 0, 1e-2);
  for (const auto& l : comp.layers) EXPECT_EQ(l.gamma, Rational(1, 3));
}

TEST(Wkb, LayerLocalization) {
  for (const char* name : {"ode1.spec", "ode_munk.spec"}) {
    CompositeExpansion comp = solveHierarchy1D(loadProblem(name), 1);
    EXPECT_LT(std::abs(comp.evaluate(0.5, 1e-6) - comp.evaluateInterior(0.5, 1e-6)), 1e-10) << name;
  }
}

TEST(Wkb, TraceConditionsHeld) {
  Problem1D p = loadProblem("ode_munk.spec");
  CompositeExpansion comp = solveHierarchy1D(p, 1);
  const double eps = 1e-9;
  for (const Endpoint* e : {&p.left, &p.right})
    for (const auto& c : e->conditions)
      EXPECT_LT(std::abs(comp.evaluate(e->x, eps, c.order) - c.value) * std::pow(eps, c.order / 3.0), 1e-12);
}

TEST(Wkb, CountMismatches) {
  auto solve = [](const std::string& text) { solveHierarchy1D(problemFromSpec(dsl::parseSpec(text)), 0); };
  EXPECT_EQ(codeOf([&] { solve(ode1WithBc("d0 = 0\n", "d0 = 0\nd1 = 0\n")); }), ErrorCode::OverdeterminedHierarchy);
  EXPECT_EQ(codeOf([&] { solve(ode1WithBc("d0 = 0\n", "")); }), ErrorCode::UnderdeterminedHierarchy);
  try {
    solve(ode1WithBc("d0 = 0\n", "d0 = 0\nd1 = 0\n"));
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("3"), std::string::npos) << e.what();
  }
}

TEST(Wkb, ZeroProblem) {
  Problem1D p = problemFromSpec(dsl::parseSpec(ode1WithBc("d0 = 0\n", "d0 = 0\n", "0")));
  CompositeExpansion comp = solveHierarchy1D(p, 2);
  for (double x : {0.0, 0.3, 1.0}) EXPECT_EQ(comp.evaluate(x, 1e-3), Complex(0));
  ValidationResult v = validate(p, 0, parseEpsGrid("1e-2:1e-4:4"));
  EXPECT_TRUE(v.exact);
  EXPECT_TRUE(std::isnan(v.fittedOrder));
  for (const auto& r : v.rows) EXPECT_EQ(r.supError, 0.0);
}

TEST(Reference, Ode1ClosedForm) {
  Problem1D p = loadProblem("ode1.spec");
  const double eps = 1e-3;
  std::vector<double> grid;
  for (int k = 0; k <= 1000; ++k) grid.push_back(k / 1000.0);
  ReferenceSolution ref = referenceSolve(p, eps, grid);
  ASSERT_EQ(ref.values.size(), grid.size());
  for (std::size_t k = 0; k < grid.size(); ++k) {
    double x = grid[k];
    double exact = x - (1 - std::exp(-x / eps)) / (1 - std::exp(-1 / eps));
    EXPECT_NEAR(std::abs(ref.values[k] - exact), 0, 1e-13) << x;
  }
  EXPECT_LT(ref.condition, 1e3);
}

TEST(Reference, ZeroAndIllConditioned) {
  Problem1D zero = problemFromSpec(dsl::parseSpec(ode1WithBc("d0 = 0\n", "d0 = 0\n", "0")));
  ReferenceSolution ref = referenceSolve(zero, 1e-4, {0, 0.5, 1});
  for (const auto& v : ref.values) EXPECT_EQ(v, Complex(0));
  Problem1D p = loadProblem("ode_munk.spec");
  EXPECT_EQ(codeOf([&] { referenceSolve(p, 1e-4, {0, 1}, 1.0); }), ErrorCode::IllConditioned);
}

TEST(Reference, MunkAnalogSatisfiesEquation) {
  Problem1D p = loadProblem("ode_munk.spec");
  const double eps = 1e-4, h = 1e-3;
  std::vector<double> grid{0, 1, 0.4 - 2 * h, 0.4 - h, 0.4, 0.4 + h, 0.4 + 2 * h};
  ReferenceSolution ref = referenceSolve(p, eps, grid);
  EXPECT_LT(std::abs(ref.values[0]), 1e-14);
  EXPECT_LT(std::abs(ref.values[1]), 1e-14);
  // eps u'''' - u' = 1 at x = 0.4 by central differences
  Complex d1 = (ref.values[5] - ref.values[3]) / (2 * h);
  Complex d4 = (ref.values[6] - 4.0 * ref.values[5] + 6.0 * ref.values[4] - 4.0 * ref.values[3] + ref.values[2]) /
               std::pow(h, 4);
  EXPECT_NEAR(std::abs(eps * d4 - d1 - 1.0), 0, 1e-3);
}

TEST(Strip, SinModeLeadingTerms) {
  auto modes = stripModes(dsl::parseSpec(readSpec("qg_strip.spec")));
  ASSERT_EQ(modes.size(), 1u);
  EXPECT_EQ(modes[0].kind, "sin");
  EXPECT_EQ(modes[0].wavenumber, Rational(1));
  CompositeExpansion comp = solveHierarchy1D(modes[0].problem, 0);
  // psi0 = (x1 - 1) sin x2 per unit mode amplitude
  for (double x : {0.0, 0.3, 1.0})
    EXPECT_NEAR(std::abs(comp.evaluateInterior(x, 1e-6) - Complex(x - 1)), 0, 1e-12) << x;
  EXPECT_EQ(comp.bookkeeping.absorbed[0], std::make_pair(std::string("west"), 2));
  EXPECT_EQ(comp.bookkeeping.absorbed[1], std::make_pair(std::string("east"), 1));
  // western layer amplitude cancels psi0 on the coast
  Complex layer = comp.evaluate(0.0, 1e-6) - comp.evaluateInterior(0.0, 1e-6);
  EXPECT_NEAR(std::abs(layer - Complex(1)), 0, 1e-12);
}

TEST(Strip, ModeValidationConverges) {
  auto modes = stripModes(dsl::parseSpec(readSpec("qg_strip.spec")));
  ValidationResult v = validateModes("qg-strip", modes, 0, parseEpsGrid("1e-6:1e-10:5"));
  ASSERT_EQ(v.rows.size(), 5u);
  EXPECT_NEAR(v.fittedOrder, 1.0 / 3.0, 0.08);
}

TEST(Strip, CurvedCoastUnsupported) {
  std::string text = readSpec("qg_strip.spec");
  auto at = text.find("chi = 1\ndchi = 0");
  ASSERT_NE(at, std::string::npos);
  text.replace(at, 16, "chi = 1 + s^2/8\ndchi = s/4");
  EXPECT_EQ(codeOf([&] { stripModes(dsl::parseSpec(text)); }), ErrorCode::Unsupported);
}

TEST(Validate, EpsGrid) {
  auto g = parseEpsGrid("1e-2:1e-5:7");
  ASSERT_EQ(g.size(), 7u);
  EXPECT_DOUBLE_EQ(g.front(), 1e-2);
  EXPECT_NEAR(g.back(), 1e-5, 1e-20);
  EXPECT_NEAR(g[1] / g[0], g[2] / g[1], 1e-12);
  EXPECT_EQ(codeOf([] { parseEpsGrid("1e-2:1e-5"); }), ErrorCode::InvalidArgument);
  EXPECT_EQ(codeOf([] { parseEpsGrid("0:1e-5:3"); }), ErrorCode::InvalidArgument);
  Problem1D p = loadProblem("ode1.spec");
  EXPECT_EQ(codeOf([&] { validate(p, 0, parseEpsGrid("1e-2:1e-4:3")); }), ErrorCode::InvalidArgument);
  EXPECT_NEAR(fitOrder({1e-2, 1e-3, 1e-4}, {3e-4, 3e-5, 3e-6}), 1.0, 1e-12);
}
