#include <gtest/gtest.h>

#include "oracles.hpp"
#include "palgen/combinatorics.hpp"
#include "palgen/error.hpp"
#include "palgen/solver.hpp"

namespace palgen {
namespace {

Word W(const char* s) { return parse_word(s); }

void expect_exact(const Word& w, std::size_t value) {
  const MuResult r = mu(w);
  ASSERT_TRUE(r.is_exact()) << w.str();
  EXPECT_EQ(r.value, value) << w.str();
  EXPECT_EQ(r.witness.size(), value) << w.str();
  EXPECT_TRUE(generates(r.witness, w)) << w.str();
}

TEST(Mu, KnownValues) {
  expect_exact(W("aa"), 1);
  expect_exact(W("ab"), 0);
  expect_exact(W("a"), 0);
  expect_exact(W(""), 0);
  for (std::size_t n = 3; n <= 30; ++n) expect_exact(single_letter_power(letter_code('a'), n), 2);
  EXPECT_TRUE(mu(W("abca")).is_infinite());
  expect_exact(W("00101100"), 5);
  expect_exact(W("abba"), 1);
  expect_exact(W("aabaa"), 2);
  expect_exact(W("0110"), 1);
  expect_exact(W("001"), 1);
}

TEST(Mu, WitnessIsCanonical) {
  const MuResult r = mu(W("00101100"));
  EXPECT_EQ(r.witness, GeneratorSet(8, {{1, 2}, {2, 4}, {3, 5}, {4, 7}, {7, 8}}));
  // Same input, same witness.
  EXPECT_EQ(mu(W("00101100")).witness, r.witness);
}

TEST(Mu, InfiniteWhenAllPalindromesFail) {
  EXPECT_TRUE(mu(W("abcab")).is_infinite());
  EXPECT_TRUE(mu(W("abca"), 1).is_infinite());
  EXPECT_FALSE(mu(W("abcba")).is_infinite());
}

TEST(Mu, CapSemantics) {
  const Word w = W("00101100");
  const MuResult capped = mu(w, 4);
  ASSERT_TRUE(capped.is_above_cap());
  EXPECT_EQ(capped.cap, 4U);
  EXPECT_GT(capped.lower_bound, 4U);
  EXPECT_FALSE(capped.at_most(4));
  const MuResult enough = mu(w, 5);
  ASSERT_TRUE(enough.is_exact());
  EXPECT_EQ(enough.value, 5U);
  EXPECT_TRUE(mu(W("aaa"), 0).is_above_cap());
  EXPECT_TRUE(mu(W("ab"), 0).at_most(0));
}

TEST(Mu, StatsReportSearchSize) {
  SolverStats stats;
  mu(W("00101100"), std::nullopt, &stats);
  EXPECT_EQ(stats.candidates, canonical_candidates(W("00101100")).size());
  EXPECT_GE(stats.initial_lower_bound, 1U);
  EXPECT_LE(stats.initial_lower_bound, 5U);
  EXPECT_GT(stats.nodes, 0U);
}

TEST(Mu, CandidatesAreNontrivialPalindromesInCanonicalOrder) {
  const Word w = W("0010110100");
  const auto cand = canonical_candidates(w);
  EXPECT_EQ(cand.size(), palindromic_intervals(w, false).size());
  for (std::size_t k = 1; k < cand.size(); ++k) {
    const auto half = [](const Interval& iv) { return iv.length() / 2; };
    EXPECT_TRUE(half(cand[k - 1]) > half(cand[k]) ||
                (half(cand[k - 1]) == half(cand[k]) && cand[k - 1] < cand[k]));
  }
}

TEST(Mu, MatchesBruteForceOnBinaryWords) {
  for (std::size_t len = 1; len <= 8; ++len) {
    for (const Word& w : oracle::all_binary(len)) {
      const auto expected = oracle::mu(w);
      const MuResult r = mu(w);
      ASSERT_TRUE(expected.has_value()) << w.str();
      ASSERT_TRUE(r.is_exact()) << w.str();
      EXPECT_EQ(r.value, *expected) << w.str();
      EXPECT_TRUE(generates(r.witness, w));
    }
  }
}

TEST(Mu, MatchesBruteForceOnTernaryWords) {
  for (std::size_t len = 1; len <= 6; ++len) {
    std::size_t total = 1;
    for (std::size_t k = 0; k < len; ++k) total *= 3;
    for (std::size_t code = 0; code < total; ++code) {
      std::vector<Letter> letters(len);
      std::size_t c = code;
      for (auto& l : letters) {
        l = static_cast<Letter>(2 + c % 3);
        c /= 3;
      }
      const Word w(letters);
      const auto expected = oracle::mu(w);
      const MuResult r = mu(w);
      if (!expected) {
        EXPECT_TRUE(r.is_infinite()) << w.str();
      } else {
        ASSERT_TRUE(r.is_exact()) << w.str();
        EXPECT_EQ(r.value, *expected) << w.str();
      }
    }
  }
}

TEST(Mu, CapAgreesWithExactValue) {
  for (std::size_t len = 1; len <= 9; ++len) {
    for (const Word& w : oracle::all_binary(len)) {
      const std::size_t exact = mu(w).value;
      for (std::size_t cap = 0; cap <= 6; ++cap) {
        const MuResult r = mu(w, cap);
        if (exact <= cap) {
          ASSERT_TRUE(r.is_exact()) << w.str() << " cap " << cap;
          EXPECT_EQ(r.value, exact);
        } else {
          ASSERT_TRUE(r.is_above_cap()) << w.str() << " cap " << cap;
          EXPECT_LE(r.lower_bound, exact);
        }
      }
    }
  }
}

TEST(Mu, InvariantUnderReversalAndRenaming) {
  for (std::size_t len = 1; len <= 10; ++len) {
    for (const Word& w : oracle::all_binary(len)) {
      const std::size_t v = mu(w).value;
      EXPECT_EQ(mu(w.reversed()).value, v) << w.str();
      EXPECT_EQ(mu(w.complemented()).value, v) << w.str();
    }
  }
}

TEST(GeneratingSets, AllListedSetsGenerateAndMinimumMatchesMu) {
  for (std::size_t len = 1; len <= 7; ++len) {
    for (const Word& w : oracle::all_binary(len)) {
      const auto sets = generating_sets(w, 3);
      const std::size_t m = mu(w).value;
      for (const auto& s : sets) {
        EXPECT_TRUE(generates(s, w));
        EXPECT_GE(s.size(), m);
        for (const auto& iv : s) EXPECT_FALSE(iv.trivial());
      }
      EXPECT_EQ(!sets.empty(), m <= 3) << w.str();
    }
  }
}

}  // namespace
}  // namespace palgen
