#include <gtest/gtest.h>

#include "brute_force.hpp"

using namespace irtopo;
using namespace irtopo::verify;

namespace {

VerifyConfig small_config(std::size_t n) {
  VerifyConfig c;
  c.max_points = n;
  c.zn_max = 500;
  c.random_trials = 500;
  return c;
}

}  // namespace

TEST(Verifier, T4SweepsAllSpacesBySize) {
  const auto r = run_claim(ClaimId::T4, small_config(4));
  EXPECT_TRUE(r.passed);
  EXPECT_EQ(r.instances_by_size.at("4"), 355u);
  EXPECT_EQ(r.instances_tested, 1u + 4u + 29u + 355u);
}

TEST(Verifier, PairClaimsUseThePairCap) {
  const auto r = run_claim(ClaimId::T7, small_config(4));
  EXPECT_TRUE(r.passed);
  EXPECT_EQ(r.instances_by_size.at("3x3"), 29u * 29u);
  EXPECT_EQ(r.instances_by_size.count("4x4"), 0u);
}

TEST(Verifier, LiteralSubcoverReadingFailsOnSierpinski) {
  const auto r = run_claim(ClaimId::L2_literal, small_config(3));
  EXPECT_FALSE(r.passed);
  EXPECT_EQ(r.classification, Classification::known_false);
  bool saw_sierpinski = false;
  for (const auto& c : r.counterexamples) {
    if (c.spaces.size() == 1 && c.spaces[0] == bf::sierpinski()) {
      saw_sierpinski = true;
      EXPECT_NE(c.detail.find("[[\"0\",\"1\"],[\"0\"]]"), std::string::npos) << c.detail;
    }
  }
  EXPECT_TRUE(saw_sierpinski);
  EXPECT_EQ(r.counterexamples.size(), std::min<std::size_t>(r.counterexample_count, 5));
}

TEST(Verifier, CounterexamplesReplayThroughJson) {
  const auto r = run_claim(ClaimId::L2_literal, small_config(2));
  const auto doc = report_json({r}, small_config(2));
  for (const auto& c : doc["claims"][0]["counterexamples"]) {
    for (const auto& s : c["spaces"]) EXPECT_NO_THROW(json_io::space_from_json(s));
  }
}

TEST(Verifier, C9Passes) { EXPECT_TRUE(run_claim(ClaimId::C9, small_config(4)).passed); }

TEST(Verifier, SinglePointSuiteTriviallyPasses) {
  for (const auto& r : run_suite(small_config(1))) {
    if (r.classification == Classification::known_false) continue;
    EXPECT_TRUE(r.passed) << info(r.claim).name;
  }
}

TEST(Verifier, SuiteAtThreePointsHasNoUnexpectedFailures) {
  const auto reports = run_suite(small_config(3));
  EXPECT_EQ(reports.size(), kClaims.size());
  EXPECT_TRUE(unexpected_failures(reports).empty());
  for (std::size_t i = 0; i < reports.size(); ++i) EXPECT_EQ(reports[i].claim, kClaims[i].id);
}

TEST(Verifier, ReportIsIndependentOfJobs) {
  auto one = small_config(3);
  auto eight = small_config(3);
  eight.jobs = 8;
  EXPECT_EQ(report_json(run_suite(one), one).dump(), report_json(run_suite(eight), one).dump());
}

TEST(Verifier, SelectedClaimsKeepSuiteOrder) {
  const auto reports = run_suite(small_config(2), {ClaimId::C9, ClaimId::T2});
  ASSERT_EQ(reports.size(), 2u);
  EXPECT_EQ(reports[0].claim, ClaimId::T2);
  EXPECT_EQ(reports[1].claim, ClaimId::C9);
}

TEST(Verifier, UnknownClaimAndBudget) {
  try {
    parse_claim("T99");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::UnknownClaim);
  }
  EXPECT_EQ(parse_claim("L2_subcover"), ClaimId::L2_subcover);
  try {
    run_claim(ClaimId::T2, small_config(6));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::BudgetExceeded);
  }
}

TEST(Verifier, OutOfScopeClaimsCarryNotes) {
  const auto r = run_claim(ClaimId::C5, small_config(2));
  EXPECT_EQ(r.classification, Classification::out_of_scope);
  EXPECT_EQ(r.instances_tested, 0u);
  EXPECT_FALSE(r.notes.empty());
}

TEST(Verifier, ProductExperimentReportsBothSenses) {
  const auto r = run_claim(ClaimId::T9_product, small_config(3));
  EXPECT_EQ(r.instances_tested, 34u * 34u);
  EXPECT_NE(r.scope.find("ambient"), std::string::npos);
}

TEST(Verifier, ReversedOrientationBreaksContractibility) {
  // With g.f ir-homotopic to the identity, a point is equivalent to any space
  // with a generic point, contractible or not.
  const FiniteSpace p = bf::point();
  const FiniteSpace v = bf::space({"g", "a", "b"}, {{0, 1}, {0, 2}});
  ASSERT_TRUE(bf::equivalent_by_cylinders(p, v, false));
  ASSERT_FALSE(bf::equivalent_by_cylinders(p, v, true));
  ASSERT_TRUE(bf::co(v).empty());
  const auto r = run_claim(ClaimId::T14_def8, small_config(3));
  EXPECT_FALSE(r.passed);
  EXPECT_EQ(r.classification, Classification::experimental);
}
