#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "oracles.hpp"
#include "pblock/partition.hpp"

using namespace pblock;

namespace {

const Partition kSample{6, 4, 2, 2, 1, 1};

std::set<Node> as_set(const std::vector<Node>& v) { return {v.begin(), v.end()}; }

}  // namespace

TEST(Partition, StripsTrailingZerosAndValidates) {
  EXPECT_EQ(Partition(std::vector<int>{3, 1, 0, 0}), (Partition{3, 1}));
  EXPECT_THROW(Partition({1, 2}), std::invalid_argument);
  EXPECT_THROW(Partition({2, -1}), std::invalid_argument);
  EXPECT_EQ(kSample.size(), 16);
  EXPECT_EQ(kSample.length(), 6);
  EXPECT_EQ(kSample.part(7), 0);
}

TEST(Partition, ConjugateOfSelfConjugateSample) {
  EXPECT_EQ(conjugate(kSample), kSample);
  EXPECT_EQ(conjugate(Partition{3, 1}), (Partition{2, 1, 1}));
  EXPECT_EQ(conjugate(Partition{}), Partition{});
}

TEST(Partition, ConjugateMatchesColumnCountOracle) {
  for (int n = 0; n <= 14; ++n)
    for (const Partition& lambda : partitions_of(n)) {
      ASSERT_EQ(conjugate(lambda), oracle::conjugate(lambda)) << to_string(lambda);
      ASSERT_EQ(conjugate(conjugate(lambda)), lambda);
    }
}

TEST(Partition, PartitionCountsMatchKnownValues) {
  const int expected[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77, 101, 135, 176};
  for (int n = 0; n < 16; ++n) EXPECT_EQ(static_cast<int>(partitions_of(n).size()), expected[n]);
  const auto ps = partitions_of(6);
  EXPECT_TRUE(std::is_sorted(ps.begin(), ps.end(), std::greater<>()));
}

TEST(Partition, DominanceOrder) {
  EXPECT_TRUE(dominates(Partition{3, 1}, Partition{2, 2}));
  EXPECT_FALSE(dominates(Partition{2, 2}, Partition{3, 1}));
  EXPECT_FALSE(dominates(Partition{3, 3}, Partition{4, 1, 1}));
  EXPECT_FALSE(dominates(Partition{4, 1, 1}, Partition{3, 3}));
  EXPECT_TRUE(dominates(Partition{2, 2}, Partition{2, 2}));
  EXPECT_FALSE(strictly_dominates(Partition{2, 2}, Partition{2, 2}));
  EXPECT_THROW(dominates(Partition{2}, Partition{1}), std::invalid_argument);
}

TEST(Partition, DominanceReversesUnderConjugation) {
  for (int n = 1; n <= 9; ++n) {
    const auto ps = partitions_of(n);
    for (const auto& a : ps)
      for (const auto& b : ps) ASSERT_EQ(dominates(a, b), dominates(conjugate(b), conjugate(a)));
  }
}

TEST(Partition, LexCompareAgreesWithDominance) {
  for (int n = 1; n <= 9; ++n) {
    const auto ps = partitions_of(n);
    for (const auto& a : ps)
      for (const auto& b : ps)
        if (strictly_dominates(a, b)) {
          ASSERT_TRUE(lex_compare(a, b) > 0);
        }
  }
}

TEST(Partition, RegularAndRestricted) {
  EXPECT_TRUE(is_p_regular(kSample, 5));
  EXPECT_FALSE(is_p_regular(Partition{1, 1, 1, 1, 1}, 5));
  EXPECT_TRUE(is_p_restricted(Partition{4, 1}, 5));
  EXPECT_FALSE(is_p_restricted(Partition{5}, 5));
  EXPECT_THROW(is_p_regular(kSample, 1), std::invalid_argument);
  for (int n = 0; n <= 14; ++n)
    for (const Partition& lambda : partitions_of(n))
      ASSERT_EQ(is_p_restricted(lambda, 5), is_p_regular(oracle::conjugate(lambda), 5));
}

TEST(Partition, ResiduesOfNodes) {
  EXPECT_EQ(residue({1, 1}, 5), 0);
  EXPECT_EQ(residue({1, 6}, 5), 0);
  EXPECT_EQ(residue({2, 4}, 5), 2);
  EXPECT_EQ(residue({4, 2}, 5), 3);
  EXPECT_EQ(residue({6, 1}, 5), 0);
}

TEST(Partition, RemovableAndAddableNodesOfSample) {
  EXPECT_EQ(removable_nodes(kSample), (std::vector<Node>{{1, 6}, {2, 4}, {4, 2}, {6, 1}}));
  EXPECT_EQ(addable_nodes(kSample),
            (std::vector<Node>{{1, 7}, {2, 5}, {3, 3}, {5, 2}, {7, 1}}));
  EXPECT_EQ(remove_node(kSample, {1, 6}), (Partition{5, 4, 2, 2, 1, 1}));
  EXPECT_EQ(add_node(kSample, {3, 3}), (Partition{6, 4, 3, 2, 1, 1}));
  EXPECT_THROW(remove_node(kSample, {1, 5}), std::invalid_argument);
  EXPECT_THROW(add_node(kSample, {2, 6}), std::invalid_argument);
}

TEST(Partition, NormalAndGoodNodesOfSample) {
  EXPECT_EQ(as_set(normal_nodes(kSample, 5)), (std::set<Node>{{1, 6}, {2, 4}}));
  EXPECT_EQ(as_set(good_nodes(kSample, 5)), (std::set<Node>{{1, 6}, {2, 4}}));
  const auto normal = normal_nodes(kSample, 5);
  EXPECT_EQ(std::count(normal.begin(), normal.end(), Node{4, 2}), 0);
}

TEST(Partition, NormalNodesMatchMatchingOracle) {
  for (int p : {2, 3, 5, 7})
    for (int n = 0; n <= 16; ++n)
      for (const Partition& lambda : partitions_of(n))
        ASSERT_EQ(as_set(normal_nodes(lambda, p)), as_set(oracle::normal_nodes(lambda, p)))
            << to_string(lambda) << " p=" << p;
}

TEST(Partition, GoodNodesAreLowestNormalPerResidue) {
  for (int n = 1; n <= 14; ++n)
    for (const Partition& lambda : partitions_of(n)) {
      std::set<Node> expected;
      for (int i = 0; i < 5; ++i)
        if (auto g = oracle::good_node(lambda, i, 5)) expected.insert(*g);
      ASSERT_EQ(as_set(good_nodes(lambda, 5)), expected) << to_string(lambda);
    }
}

TEST(Partition, EveryNonEmptyRegularPartitionHasAGoodNode) {
  for (int n = 1; n <= 16; ++n)
    for (const Partition& lambda : partitions_of(n))
      if (is_p_regular(lambda, 5)) {
        ASSERT_FALSE(good_nodes(lambda, 5).empty()) << to_string(lambda);
      }
}

TEST(Partition, TextRoundTrip) {
  EXPECT_EQ(to_string(kSample), "6,4,2,2,1,1");
  EXPECT_EQ(to_compact_string(kSample), "(6,4,2^2,1^2)");
  EXPECT_EQ(to_string(Partition{}), "-");
  EXPECT_EQ(parse_partition("6,4,2,2,1,1"), kSample);
  EXPECT_EQ(parse_partition("(6,4,2^2,1^2)"), kSample);
  EXPECT_EQ(parse_partition("-"), Partition{});
  EXPECT_EQ(parse_partition(""), Partition{});
  EXPECT_THROW(parse_partition("2,x"), std::invalid_argument);
  EXPECT_THROW(parse_partition("1,2"), std::invalid_argument);
  for (int n = 0; n <= 10; ++n)
    for (const Partition& lambda : partitions_of(n)) {
      ASSERT_EQ(parse_partition(to_string(lambda)), lambda);
      ASSERT_EQ(parse_partition(to_compact_string(lambda)), lambda);
    }
}

TEST(Partition, HookShapes) {
  EXPECT_TRUE(is_hook(Partition{5, 1, 1}));
  EXPECT_FALSE(is_hook(Partition{3, 2}));
  EXPECT_TRUE(is_hook(Partition{}));
}
