#include <gtest/gtest.h>

#include <algorithm>
#include <limits>

#include "blexpand/demo.hpp"
#include "blexpand/error.hpp"

using namespace blexpand;

TEST(Report, DemoRoundTripAndDeterminism) {
  for (const auto& name : demoNames()) {
    Report a = runDemo(name);
    std::string text = emitJson(a);
    EXPECT_EQ(parseJson(text), a) << name;
    EXPECT_EQ(emitJson(parseJson(text)), text) << name;
    EXPECT_EQ(emitJson(runDemo(name)), text) << name;
  }
}

TEST(Report, MunkSummary) {
  Report r = runDemo("qg-munk");
  EXPECT_EQ(r.schema, 1);
  EXPECT_EQ(r.exitCode, 0);
  ASSERT_EQ(r.components.size(), 2u);
  const int expected[] = {2, 1};
  for (int c = 0; c < 2; ++c) {
    for (const auto& s : r.components[c].samples) {
      ASSERT_EQ(s.classes.size(), 1u);
      EXPECT_EQ(s.classes[0].gamma, "1/3");
      EXPECT_EQ(s.classes[0].multiplicity, 3);
      EXPECT_EQ(s.regularCount, 1);
    }
    ASSERT_EQ(r.components[c].exponents.size(), 1u);
    EXPECT_EQ(r.components[c].exponents[0].mPlus, expected[c]);
  }
}

TEST(Report, DiscFailsWithTurningPoints) {
  Report r = runDemo("qg-disc");
  EXPECT_EQ(r.exitCode, 1);
  ASSERT_EQ(r.components.size(), 1u);
  EXPECT_EQ(r.components[0].h3.status, "fail");
  EXPECT_FALSE(r.components[0].turningPoints.empty());
}

TEST(Report, StommelFlagsClaims) {
  Report r = runDemo("qg-stommel");
  int disagreements = 0;
  for (const auto& c : r.claims) disagreements += c.agrees ? 0 : 1;
  EXPECT_EQ(disagreements, 2);
  EXPECT_EQ(r.notes.size(), 2u);
}

TEST(Report, ValidationCsvAndExactSentinel) {
  Report r = runDemo("ode-munk");
  ASSERT_TRUE(r.validation.has_value());
  std::string csv = emitCsv(*r.validation);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "eps,sup_error,interior_residual,bc_residual");
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 8);

  ValidationResult exact;
  exact.problem = "zero";
  exact.exact = true;
  exact.fittedOrder = std::numeric_limits<double>::quiet_NaN();
  exact.rows.push_back({1e-3, 0, 0, 0, 1});
  Report z;
  z.validation = validationDoc(exact);
  std::string text = emitJson(z);
  EXPECT_NE(text.find("\"fitted_order\": \"exact\""), std::string::npos);
  EXPECT_EQ(parseJson(text), z);
}

TEST(Report, H5FailsOnCountMismatch) {
  std::string text =
      "[operator]\nname = t\norder = 2\nnvars = 0\nexpr = -eps*xi1^2 + i*xi1\n"
      "[boundary.left]\ncurve = point\nside = left\nat = 0\n"
      "[boundary.right]\ncurve = point\nside = right\nat = 1\n"
      "[problem]\nkind = bvp1d\nforcing = 1\n[bc.left]\nd0 = 0\nd1 = 0\n[bc.right]\nd0 = 0\n";
  Check h5 = assessH5(dsl::parseSpec(text));
  EXPECT_EQ(h5.status, Check::Status::Fail);
  EXPECT_NE(h5.evidence.find("OverdeterminedHierarchy"), std::string::npos);
  EXPECT_NE(h5.evidence.find("3 conditions, 2 unknowns"), std::string::npos) << h5.evidence;
  EXPECT_EQ(assessH5(dsl::parseSpec(loadSpecText("qg-munk"))).status, Check::Status::NotAssessed);
  EXPECT_EQ(assessH5(dsl::parseSpec(loadSpecText("qg-strip"))).status, Check::Status::Pass);
}

TEST(Report, MalformedJsonRejected) {
  EXPECT_THROW(parseJson("{"), Error);
  EXPECT_THROW(parseJson("{\"schema\": 2}"), Error);
  EXPECT_THROW(loadSpecText("no-such-spec"), Error);
}
