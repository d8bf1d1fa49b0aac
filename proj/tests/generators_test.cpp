#include <gtest/gtest.h>

#include <map>
#include <random>

#include "oracles.hpp"
#include "palgen/disjoint_set.hpp"
#include "palgen/error.hpp"
#include "palgen/generators.hpp"

namespace palgen {
namespace {

Word W(const char* s) { return parse_word(s); }

// Partition labels -> canonical partition for comparison.
Partition from_labels(const std::vector<std::size_t>& labels) {
  std::map<std::size_t, std::vector<std::size_t>> by_label;
  for (std::size_t p = 0; p < labels.size(); ++p) by_label[labels[p]].push_back(p + 1);
  std::vector<std::vector<std::size_t>> classes;
  for (auto& [label, cls] : by_label) classes.push_back(cls);
  return Partition(classes);
}

TEST(DisjointSet, Basics) {
  DisjointSet ds(5);
  EXPECT_EQ(ds.class_count(), 5U);
  EXPECT_TRUE(ds.unite(0, 1));
  EXPECT_FALSE(ds.unite(1, 0));
  EXPECT_TRUE(ds.unite(3, 4));
  EXPECT_TRUE(ds.same(0, 1));
  EXPECT_FALSE(ds.same(1, 3));
  EXPECT_EQ(ds.class_count(), 3U);
}

TEST(Reflect, Involution) {
  const Interval iv(2, 7);
  for (std::size_t k = 2; k <= 7; ++k) EXPECT_EQ(reflect(iv, reflect(iv, k)), k);
  EXPECT_EQ(reflect(iv, 2), 7U);
  EXPECT_EQ(reflect(Interval(3, 5), 4), 4U);
  EXPECT_THROW(reflect(iv, 1), RangeError);
  EXPECT_THROW(reflect(iv, 8), RangeError);
}

TEST(GeneratorSet, SortedDeduplicatedAndBounded) {
  GeneratorSet s(5, {{2, 4}, {1, 2}, {2, 4}});
  EXPECT_EQ(s.size(), 2U);
  EXPECT_EQ(s.intervals().front(), Interval(1, 2));
  EXPECT_FALSE(s.insert({1, 2}));
  EXPECT_TRUE(s.insert({3, 5}));
  EXPECT_TRUE(s.contains({3, 5}));
  EXPECT_THROW(GeneratorSet(4, {{3, 5}}), RangeError);
  EXPECT_THROW(s.insert({1, 6}), RangeError);
}

TEST(Closure, KnownValues) {
  // Five intervals identify every position of 00101100 with its letter class.
  const GeneratorSet s(8, {{1, 2}, {2, 4}, {3, 5}, {4, 7}, {7, 8}});
  EXPECT_EQ(closure(s), letter_partition(W("00101100")));
  EXPECT_TRUE(generates(s, W("00101100")));
  EXPECT_EQ(letter_partition(W("abca")).size(), 3U);
}

TEST(Closure, EmptySetIsDiscrete) {
  EXPECT_EQ(closure(GeneratorSet(3)).size(), 3U);
  EXPECT_TRUE(generates(GeneratorSet(2), W("ab")));
  EXPECT_FALSE(generates(GeneratorSet(2), W("aa")));
  EXPECT_TRUE(generates(GeneratorSet(0), W("")));
}

TEST(Closure, RandomSetsMatchOracleAndAreMonotone) {
  std::mt19937_64 rng(20240611);
  for (int trial = 0; trial < 2000; ++trial) {
    const std::size_t n = 1 + rng() % 14;
    std::vector<oracle::Pair> pairs;
    GeneratorSet set(n);
    const std::size_t k = rng() % 5;
    for (std::size_t t = 0; t < k; ++t) {
      std::size_t i = 1 + rng() % n;
      std::size_t j = 1 + rng() % n;
      if (i > j) std::swap(i, j);
      pairs.emplace_back(i, j);
      const Partition before = closure(set);
      set.insert({i, j});
      const Partition after = closure(set);
      EXPECT_TRUE(before.refines(after));
      EXPECT_LE(after.size(), before.size());
    }
    EXPECT_EQ(closure(set), from_labels(oracle::closure_labels(n, pairs)));
  }
}

TEST(Generates, MatchesOracleExhaustivelyForSmallWords) {
  for (std::size_t len = 1; len <= 6; ++len) {
    for (const Word& w : oracle::all_binary(len)) {
      const auto cand = oracle::nontrivial_palindromes(w);
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << std::min<std::size_t>(cand.size(), 10)); ++mask) {
        std::vector<oracle::Pair> pairs;
        GeneratorSet set(len);
        for (std::size_t c = 0; c < cand.size() && c < 10; ++c) {
          if (mask >> c & 1U) {
            pairs.push_back(cand[c]);
            set.insert({cand[c].first, cand[c].second});
          }
        }
        ASSERT_EQ(generates(set, w), oracle::generates(w, pairs)) << w.str();
      }
    }
  }
}

TEST(Generates, NonPalindromeIntervalNeverGenerates) {
  EXPECT_FALSE(generates(GeneratorSet(3, {{1, 2}}), W("aba")));
  EXPECT_THROW(generates(GeneratorSet(3), W("ab")), DimensionError);
}

TEST(Leaves, PositionsMovedByAtMostOneGenerator) {
  const Word w = W("00101100");
  const GeneratorSet s(8, {{1, 2}, {2, 4}, {3, 5}, {4, 7}, {7, 8}});
  const auto ls = leaves(s, w);
  for (const Leaf& leaf : ls) {
    std::size_t moving = 0;
    for (const Interval& iv : s) moving += iv.contains(leaf.position) && reflect(iv, leaf.position) != leaf.position;
    EXPECT_LE(moving, 1U);
    EXPECT_EQ(leaf.label, w.at(leaf.position));
  }
  // Position 1 is moved only by (1,2); position 8 only by (7,8).
  EXPECT_EQ(ls.front().position, 1U);
  EXPECT_EQ(ls.back().position, 8U);
  EXPECT_THROW(leaves(GeneratorSet(2), W("00")), ContractError);
}

}  // namespace
}  // namespace palgen
