#include <gtest/gtest.h>

#include "pblock/verify.hpp"

using namespace pblock;

class NamedChecksAtFive : public ::testing::TestWithParam<std::string> {};

TEST_P(NamedChecksAtFive, Passes) {
  const auto results = run_checks(5, {GetParam()});
  ASSERT_EQ(results.size(), 1u);
  EXPECT_TRUE(results.front().pass) << results.front().detail;
  EXPECT_FALSE(results.front().counterexample.has_value());
}

INSTANTIATE_TEST_SUITE_P(AllChecks, NamedChecksAtFive,
                         ::testing::Values("jm-classification", "xi-sets", "prop31", "prop212", "lemma34",
                                           "mullineux-conformance", "parity-flip", "theta-table",
                                           "partner-counts", "loewy-partition", "oracle-equivalence"),
                         [](const auto& info) {
                           std::string s = info.param;
                           for (char& ch : s)
                             if (ch == '-') ch = '_';
                           return s;
                         });

TEST(Verify, ElevenChecksRegistered) { EXPECT_EQ(named_checks().size(), 11u); }

TEST(Verify, ResultsOrderedByName) {
  const auto results = run_checks(5, {"xi-sets", "prop31", "jm-classification"});
  ASSERT_EQ(results.size(), 3u);
  EXPECT_EQ(results[0].name, "jm-classification");
  EXPECT_EQ(results[1].name, "prop31");
  EXPECT_EQ(results[2].name, "xi-sets");
}

TEST(Verify, UnknownNameThrows) { EXPECT_THROW(run_checks(5, {"nope"}), std::invalid_argument); }

TEST(Verify, DeterministicAcrossRuns) {
  const auto a = run_checks(7, {"prop31", "parity-flip"});
  const auto b = run_checks(7, {"prop31", "parity-flip"});
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t k = 0; k < a.size(); ++k) {
    EXPECT_EQ(a[k].pass, b[k].pass);
    EXPECT_EQ(a[k].detail, b[k].detail);
  }
}

TEST(Verify, CheckerKeepsFirstFailure) {
  Checker c("demo");
  c.expect(true, Partition{1}, "fine");
  c.expect(false, Partition{2}, "first");
  c.expect(false, Partition{3}, "second");
  const CheckResult r = c.finish();
  EXPECT_FALSE(r.pass);
  EXPECT_EQ(r.counterexample, (Partition{2}));
  EXPECT_NE(r.detail.find("first"), std::string::npos);
  EXPECT_EQ(r.detail.find("second"), std::string::npos);
}

TEST(Verify, PrintedSelfConjugateFormIsReportedAsNote) {
  const auto r = check_prop31(5);
  EXPECT_TRUE(r.pass);
  EXPECT_NE(r.detail.find("misclassifies"), std::string::npos);
}
