#include <gtest/gtest.h>

#include "oracles.hpp"
#include "pblock/abacus.hpp"
#include "pblock/hooks.hpp"

using namespace pblock;

namespace {
const Partition kSample{6, 4, 2, 2, 1, 1};
}

TEST(Hooks, HookDiagramOfSample) {
  const Tableau h = hook_lengths(kSample);
  // The first row follows from the formula; see the README note on the worked row.
  EXPECT_EQ(h[0], (std::vector<int>{11, 8, 5, 4, 2, 1}));
  EXPECT_EQ(h[1], (std::vector<int>{8, 5, 2, 1}));
  EXPECT_EQ(h[2], (std::vector<int>{5, 2}));
  EXPECT_EQ(h[3], (std::vector<int>{4, 1}));
  EXPECT_EQ(h[4], (std::vector<int>{2}));
  EXPECT_EQ(h[5], (std::vector<int>{1}));
  EXPECT_EQ(h[0][0], 11);
}

TEST(Hooks, HookLengthsMatchWalkingOracle) {
  for (int n = 0; n <= 16; ++n)
    for (const Partition& lambda : partitions_of(n))
      ASSERT_EQ(hook_lengths(lambda), oracle::hooks(lambda)) << to_string(lambda);
}

TEST(Hooks, HookLengthsTransposeUnderConjugation) {
  for (int n = 1; n <= 12; ++n)
    for (const Partition& lambda : partitions_of(n)) {
      const Tableau h = hook_lengths(lambda);
      const Tableau hc = hook_lengths(conjugate(lambda));
      for (std::size_t i = 0; i < h.size(); ++i)
        for (std::size_t j = 0; j < h[i].size(); ++j) ASSERT_EQ(h[i][j], hc[j][i]);
    }
}

TEST(Hooks, NuP) {
  EXPECT_EQ(nu_p(10, 5), 1);
  EXPECT_EQ(nu_p(50, 5), 2);
  EXPECT_EQ(nu_p(7, 5), 0);
  EXPECT_THROW(nu_p(0, 5), std::invalid_argument);
}

TEST(Hooks, PowerDiagramOfSample) {
  const Tableau d5 = p_power_diagram(kSample, 5);
  int ones = 0, others = 0;
  for (const auto& row : d5)
    for (int v : row) {
      if (v == 1) ++ones;
      else if (v != 0) ++others;
    }
  EXPECT_EQ(ones, 3);
  EXPECT_EQ(others, 0);
  EXPECT_EQ(d5[0][2], 1);
  EXPECT_EQ(d5[1][1], 1);
  EXPECT_EQ(d5[2][0], 1);
  for (const auto& row : p_power_diagram(kSample, 3))
    for (int v : row) EXPECT_EQ(v, 0);
}

TEST(Hooks, DirectJmTestOnSample) {
  EXPECT_FALSE(is_jm_direct(kSample, 5));
  EXPECT_TRUE(is_jm_direct(kSample, 3));
}

TEST(Hooks, CoresAreJm) {
  for (int n = 0; n <= 18; ++n)
    for (const Partition& lambda : partitions_of(n)) {
      if (p_weight(lambda, 5) != 0) continue;
      ASSERT_TRUE(is_jm_direct(lambda, 5)) << to_string(lambda);
    }
}

TEST(Hooks, JmTestsAgreeForSmallPrimes) {
  for (int p : {2, 3, 5, 7})
    for (int n = 0; n <= 18; ++n)
      for (const Partition& lambda : partitions_of(n))
        ASSERT_EQ(is_jm_direct(lambda, p), is_jm_fayers(lambda, p)) << to_string(lambda) << " p=" << p;
}

TEST(Hooks, JmPropertyIsConjugationInvariant) {
  for (int n = 0; n <= 18; ++n)
    for (const Partition& lambda : partitions_of(n))
      ASSERT_EQ(is_jm_direct(lambda, 5), is_jm_direct(conjugate(lambda), 5));
}
