#include <gtest/gtest.h>

#include "oracles.hpp"
#include "palgen/combinatorics.hpp"
#include "palgen/error.hpp"
#include "palgen/source.hpp"
#include "palgen/sturm.hpp"

namespace palgen {
namespace {

Word W(const char* s) { return parse_word(s); }

TEST(ThueMorse, PrefixAndIterates) {
  EXPECT_EQ(thue_morse_prefix(16).str(), "0110100110010110");
  EXPECT_EQ(thue_morse_prefix(0).str(), "");
  for (std::size_t k = 0; k <= 10; ++k) EXPECT_EQ(tau_iterate(k), oracle::thue_morse(k));
  EXPECT_EQ(tau_iterate(2).str(), "0110");
  EXPECT_THROW(tau_iterate(kMaxTauIterations + 1), ResourceError);
}

TEST(ThueMorse, OverlapFree) {
  const Word t = thue_morse_prefix(256);
  // No factor a·v·a·v·a.
  for (std::size_t p = 1; 2 * p + 1 <= t.size(); ++p) {
    for (std::size_t s = 1; s + 2 * p <= t.size(); ++s) {
      bool overlap = true;
      for (std::size_t k = 0; k <= p && overlap; ++k) overlap = t.at(s + k) == t.at(s + p + k);
      EXPECT_FALSE(overlap) << "period " << p << " at " << s;
    }
  }
}

TEST(Directive, ParseAndValidate) {
  EXPECT_EQ(DirectiveSequence::parse("1,2,3").terms, (std::vector<std::size_t>{1, 2, 3}));
  EXPECT_EQ(DirectiveSequence::parse("1,2").str(), "1,2");
  EXPECT_THROW(DirectiveSequence({1, 0}), ContractError);
  EXPECT_THROW(DirectiveSequence::parse("1,x"), ParseError);
}

TEST(StandardWords, MatchRecurrence) {
  for (const std::vector<std::size_t>& d :
       {std::vector<std::size_t>{1, 1, 1, 1, 1, 1, 1, 1}, {2, 1, 3, 1, 2, 2}, {1, 3, 1, 3, 1, 3}}) {
    const DirectiveSequence seq(d);
    for (std::size_t steps = 1; steps <= d.size(); ++steps) {
      const Word expected = oracle::standard(d, steps);
      const Word got = standard_word(seq, expected.size());
      EXPECT_TRUE(got.size() >= expected.size());
      EXPECT_EQ(got.factor({1, expected.size()}), expected);
    }
  }
  EXPECT_EQ(standard_prefix(DirectiveSequence({1}), 13).str(), "0100101001001");
  EXPECT_THROW(standard_word(DirectiveSequence({1, 1}), 100), RangeError);
  EXPECT_THROW(standard_word(DirectiveSequence({1}), 0), ContractError);
}

TEST(StandardWords, PrefixesAreBalanced) {
  for (const char* d : {"1", "2", "1,2", "3,1,4"}) {
    const Word w = standard_prefix(DirectiveSequence::parse(d), 200);
    EXPECT_TRUE(is_balanced(w)) << d;
  }
}

TEST(Doubling, SetAndMorphism) {
  EXPECT_EQ(DoublingSet::parse("01").str(), "01");
  EXPECT_EQ(DoublingSet::parse("").str(), "");
  EXPECT_THROW(DoublingSet::parse("2"), ParseError);
  EXPECT_EQ(double_word(W("01011"), DoublingSet::parse("0")).str(), "0010011");
  EXPECT_EQ(double_word(W("01"), DoublingSet::parse("01")).str(), "0011");
  EXPECT_EQ(doubling_set(W("0010011")).str(), "0");
  EXPECT_THROW(doubling_set(W("")), UndefinedInputError);
}

TEST(Lean, KnownValues) {
  const LeanResult r = lean(W("0010011"));
  EXPECT_EQ(r.A.str(), "0");
  EXPECT_EQ(r.lean.str(), "01011");
  EXPECT_TRUE(is_double_sturmian_factor(W("0010011")));
  EXPECT_FALSE(is_balanced(W("0010011")));
}

TEST(Lean, MatchesShortestOracle) {
  for (std::size_t len = 1; len <= 10; ++len) {
    for (const Word& w : oracle::all_binary(len)) {
      const LeanResult r = lean(w);
      EXPECT_EQ(r.A.zero, oracle::undoublable(w, 0)) << w.str();
      EXPECT_EQ(r.A.one, oracle::undoublable(w, 1)) << w.str();
      EXPECT_TRUE(contains_factor(double_word(r.lean, r.A), w)) << w.str();
      const auto shortest = oracle::shortest_lean_words(w);
      ASSERT_FALSE(shortest.empty());
      // The shortest word is unique at these lengths.
      EXPECT_EQ(shortest, std::set<std::string>{r.lean.str()}) << w.str();
    }
  }
}

TEST(Lean, DoubleSturmianFactorMatchesDefinition) {
  for (std::size_t len = 1; len <= 9; ++len) {
    for (const Word& w : oracle::all_binary(len)) {
      EXPECT_EQ(is_double_sturmian_factor(w), oracle::double_sturmian_factor(w)) << w.str();
    }
  }
}

TEST(Source, ParseAndPrefix) {
  EXPECT_EQ(Source::parse("tm").prefix(8).str(), "01101001");
  EXPECT_EQ(Source::parse("periodic:abc").prefix(7).str(), "abcabca");
  EXPECT_EQ(Source::parse("std:1").prefix(8).str(), "01001010");
  EXPECT_EQ(Source::parse("std:1,1,1,1,1,1").prefix(60), Source::parse("std:1").prefix(60));
  EXPECT_EQ(Source::parse("double:std:1/A=0").prefix(8).str(), "00100001");
  for (const char* text : {"tm", "std:1,2", "periodic:aababb", "double:std:1,2/A=01"}) {
    EXPECT_EQ(Source::parse(text).str(), text);
  }
  EXPECT_THROW(Source::parse("fib"), ParseError);
  EXPECT_THROW(Source::parse("periodic:"), ParseError);
  EXPECT_THROW(Source::parse("std:"), ParseError);
  EXPECT_THROW(Source::parse("tm").prefix(kMaxSourcePrefix + 1), ResourceError);
}

}  // namespace
}  // namespace palgen
