#include <gtest/gtest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "blexpand/dsl/elaborate.hpp"
#include "blexpand/dsl/parser.hpp"
#include "blexpand/dsl/spec_file.hpp"
#include "blexpand/profile.hpp"
#include "qg_symbols.hpp"

using namespace blexpand;
using namespace blexpand::dsl;

namespace {

std::string readSpec(const std::string& name) {
  std::ifstream in(std::string(BLEXPAND_SPEC_DIR) + "/" + name);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

SymbolPoly sym(const std::string& text, int nvars = 0, std::map<std::string, Scalar> scalars = {}) {
  Environment env;
  env.nvars = nvars;
  env.scalars = std::move(scalars);
  env.symbols["xin"] = SymbolPoly::xin(nvars);
  for (int k = 0; k < nvars; ++k) env.symbols["zeta" + std::to_string(k + 1)] = SymbolPoly::zeta(nvars, k);
  return evaluateSymbol(*parseExpression(text), env);
}

SourceSpan errorSpan(const std::string& text) {
  try {
    parseSpec(text);
  } catch (const ParseError& e) {
    return e.span();
  }
  return {0, 0};
}

}  // namespace

TEST(Dsl, ElaboratesMunkMonomials) {
  SymbolPoly a = sym("i*eps^-1*xin - (1/Re)*xin^4", 0, {{"Re", Scalar::exact(1)}});
  SymbolPoly expected = SymbolPoly::constant(0, CRat::imagUnit()) * SymbolPoly::epsPower(0, -1) * SymbolPoly::xin(0) -
                        SymbolPoly::xin(0).pow(4);
  EXPECT_EQ(a, expected);
  EXPECT_EQ(a.terms().size(), 2u);
}

TEST(Dsl, AdditionIsLinear) {
  SymbolPoly lhs = sym("xin^2 + zeta1^2 + eps^(1/2)*xin", 1);
  SymbolPoly rhs = sym("xin^2 + zeta1^2", 1) + sym("eps^(1/2)*xin", 1);
  EXPECT_EQ(lhs, rhs);
}

TEST(Dsl, ExactTrigAtSpecialAngles) {
  Environment env;
  EXPECT_EQ(evaluateScalar(*parseExpression("cos(pi/2)"), env), Scalar::exact(0));
  EXPECT_EQ(evaluateScalar(*parseExpression("sin(7*pi/6)"), env), Scalar::exact(makeRational(-1, 2)));
  EXPECT_EQ(evaluateScalar(*parseExpression("sqrt(9/4)"), env), Scalar::exact(makeRational(3, 2)));
  EXPECT_NEAR(evaluateScalar(*parseExpression("cos(pi/6)"), env).toDouble(), std::sqrt(3.0) / 2, 1e-15);
}

TEST(Dsl, ErrorsCarryLineAndColumn) {
  try {
    parseExpression("xin + * 2");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.span().line, 1);
    EXPECT_EQ(e.span().column, 7);
  }
  SourceSpan s = errorSpan("[operator]\norder = 2\nnvars = 0\nexpr = xin^2 +\n");
  EXPECT_EQ(s.line, 4);
  s = errorSpan("[operator]\norder = 2\nnvars = 0\nexpr = xin^2\n[bogus]\n");
  EXPECT_EQ(s.line, 5);
  s = errorSpan("[operator]\norder = 2\nnvars = 0\n  expr = xin^2 / xin\n");
  EXPECT_EQ(s.line, 0);  // syntactically fine; rejected at elaboration
}

TEST(Dsl, RejectsNonPolynomialConstructs) {
  EXPECT_THROW(sym("xin^2 / xin"), Error);
  EXPECT_THROW(sym("xin^-1"), Error);
  EXPECT_THROW(sym("xin^(1/2)"), Error);
  EXPECT_THROW(sym("undefined_name * xin"), Error);
  try {
    sym("1 + unknown");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.code(), ErrorCode::UndefinedName);
    EXPECT_EQ(e.span().column, 5);
  }
}

TEST(Dsl, ShippedSpecsRoundTrip) {
  for (const char* name :
       {"qg_munk.spec", "qg_stommel.spec", "qg_disc.spec", "ode1.spec", "ode_munk.spec", "qg_strip.spec"}) {
    std::string text = readSpec(name);
    ASSERT_FALSE(text.empty()) << name;
    OperatorSpec spec = parseSpec(text);
    std::string printed = printSpec(spec);
    OperatorSpec again = parseSpec(printed);
    EXPECT_TRUE(structurallyEqual(spec, again)) << name;
    EXPECT_EQ(printSpec(again), printed) << name;
  }
}

TEST(Dsl, RandomExpressionsRoundTrip) {
  std::mt19937 rng(7);
  const char* atoms[] = {"xin", "zeta1", "eps", "i", "2", "(3/4)", "0.5", "pi"};
  std::function<std::string(int)> gen = [&](int depth) -> std::string {
    if (depth == 0 || rng() % 3 == 0) return atoms[rng() % 8];
    switch (rng() % 6) {
      case 0: return gen(depth - 1) + " + " + gen(depth - 1);
      case 1: return gen(depth - 1) + " - " + gen(depth - 1);
      case 2: return gen(depth - 1) + "*" + gen(depth - 1);
      case 3: return "-" + gen(depth - 1);
      case 4: return "(" + gen(depth - 1) + ")^" + std::to_string(rng() % 4);
      default: return "(" + gen(depth - 1) + ")";
    }
  };
  for (int t = 0; t < 300; ++t) {
    std::string text = gen(4);
    ExprPtr e = parseExpression(text);
    ExprPtr again = parseExpression(printExpr(*e));
    EXPECT_TRUE(structurallyEqual(*e, *again)) << text << " -> " << printExpr(*e);
  }
}

TEST(Dsl, FuzzedInputsOnlyThrowParseErrors) {
  std::mt19937 rng(11);
  const std::string alphabet = "xin^()+-*/ 0123456789.,=[]#\nabcepsz";
  std::string base = readSpec("qg_munk.spec");
  for (int t = 0; t < 500; ++t) {
    std::string text = base;
    for (int k = 0; k < 4; ++k) text[rng() % text.size()] = alphabet[rng() % alphabet.size()];
    try {
      OperatorSpec spec = parseSpec(text);
      for (const auto& b : spec.boundaries)
        for (const auto& s : boundarySamples(spec, b.id)) elaborateAtSample(spec, b.id, s);
    } catch (const Error&) {
    }
  }
  SUCCEED();
}

TEST(Dsl, WestChartMatchesHandBuiltSymbol) {
  OperatorSpec spec = parseSpec(readSpec("qg_munk.spec"));
  // s = 2 would be outside the listed samples but is a valid parameter; slope s/4 = 1/2
  SymbolPoly a = elaborateAtSample(spec, "west", Scalar::exact(2));
  EXPECT_EQ(a, qgtest::munk(true, makeRational(1, 2)));
  SymbolPoly flat = elaborateAtSample(spec, "west", Scalar::exact(0));
  // quartic coefficient -1/Re at zero slope
  EXPECT_EQ(flat.xinCoefficient(4), SymbolPoly::constant(1, CRat(-1)));
}

TEST(Dsl, DiscChartDegeneratesAtNorthPole) {
  OperatorSpec spec = parseSpec(readSpec("qg_disc.spec"));
  SymbolPoly a = elaborateAtSample(spec, "coast", Scalar::piTimes(makeRational(1, 2)));
  // the eps^-1 term no longer involves xin
  for (const auto& [key, c] : a.terms())
    if (key.e < 0) EXPECT_EQ(key.xdeg, 0);
  EXPECT_EQ(profileAt(a, zetaSamples(spec)).pattern().str(), "m=4 regular=0 classes=[(1/4 x4)]");
}

TEST(Dsl, ConstantCoefficientSpecIsSampleIndependent) {
  OperatorSpec spec = parseSpec(readSpec("qg_strip.spec"));
  SymbolPoly first = elaborateAtSample(spec, "west", Scalar::exact(0));
  for (const auto& s : boundarySamples(spec, "west")) EXPECT_EQ(elaborateAtSample(spec, "west", s), first);
}

TEST(Dsl, DeclaredOrderIsChecked) {
  std::string text = readSpec("ode1.spec");
  text.replace(text.find("order = 2"), 9, "order = 3");
  OperatorSpec spec = parseSpec(text);
  EXPECT_THROW(elaborateAtSample(spec, "left", Scalar::exact(0)), Error);
}
