#include <gtest/gtest.h>

#include <unordered_set>

#include "oracles.hpp"
#include "palgen/error.hpp"
#include "palgen/word.hpp"

namespace palgen {
namespace {

TEST(Word, ParseRoundTrip) {
  for (const char* text : {"", "0", "0110", "abca", "01abz", "aababb"}) {
    EXPECT_EQ(parse_word(text).str(), text);
  }
}

TEST(Word, ParseErrorNamesIndex) {
  try {
    parse_word("01x2");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.index(), 4U);
  }
  EXPECT_THROW(parse_word("A"), ParseError);
  EXPECT_THROW(parse_word("0 1"), ParseError);
}

TEST(Word, TooManyLetters) {
  EXPECT_NO_THROW(parse_word("abcdefghijklmnopqrstuvwxyz"));
  EXPECT_THROW(parse_word("01abcdefghijklmnopqrstuvwxyz"), ParseError);
  EXPECT_THROW(Word(std::vector<Letter>{0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 17, 18, 19, 20, 21, 22, 23, 24, 25, 26}), DomainError);
}

TEST(Word, PositionsAreOneBased) {
  const Word w = parse_word("abc");
  EXPECT_EQ(display_char(w.at(1)), 'a');
  EXPECT_EQ(display_char(w.at(3)), 'c');
  EXPECT_THROW(w.at(0), RangeError);
  EXPECT_THROW(w.at(4), RangeError);
  EXPECT_EQ(w.factor({2, 3}).str(), "bc");
  EXPECT_THROW(w.factor({2, 4}), RangeError);
}

TEST(Word, IntervalRejectsBadBounds) {
  EXPECT_THROW(Interval(0, 1), RangeError);
  EXPECT_THROW(Interval(3, 2), RangeError);
  const Interval iv(2, 5);
  EXPECT_EQ(iv.length(), 4U);
  EXPECT_TRUE(iv.contains(2));
  EXPECT_FALSE(iv.contains(6));
  EXPECT_EQ(to_string(iv), "(2,5)");
}

TEST(Word, Basics) {
  const Word w = parse_word("0010011");
  EXPECT_TRUE(w.is_binary());
  EXPECT_FALSE(parse_word("ab").is_binary());
  EXPECT_EQ(w.alphabet_size(), 2U);
  EXPECT_EQ(w.count(0), 4U);
  EXPECT_EQ(w.reversed().str(), "1100100");
  EXPECT_EQ(w.complemented().str(), "1101100");
  EXPECT_EQ((parse_word("01") + parse_word("10")).str(), "0110");
  EXPECT_EQ(parse_word("").alphabet_size(), 0U);
  EXPECT_EQ(single_letter_power(1, 3).str(), "111");
}

TEST(Word, OrderMatchesPrintedOrder) {
  const std::vector<std::string> texts = {"", "0", "01", "1", "10", "a", "ab", "b", "z"};
  for (std::size_t a = 0; a < texts.size(); ++a) {
    for (std::size_t b = 0; b < texts.size(); ++b) {
      EXPECT_EQ(parse_word(texts[a]) < parse_word(texts[b]), texts[a] < texts[b]) << texts[a] << " " << texts[b];
    }
  }
}

TEST(Word, PackedBinaryEnumeratesInLexOrder) {
  for (std::size_t len = 0; len <= 10; ++len) {
    Word prev;
    for (std::uint64_t b = 0; b < binary_word_count(len); ++b) {
      const PackedBinary p{b, static_cast<std::uint8_t>(len)};
      const Word w = p.to_word();
      EXPECT_EQ(w, oracle::bin(b, len));
      EXPECT_EQ(PackedBinary::from_word(w).bits, b);
      if (b > 0) {
        EXPECT_LT(prev, w);
      }
      prev = w;
    }
  }
}

TEST(Word, HashDistinguishesBinaryWords) {
  std::unordered_set<std::size_t> hashes;
  std::size_t total = 0;
  for (std::size_t len = 0; len <= 12; ++len) {
    for (const Word& w : oracle::all_binary(len)) {
      hashes.insert(std::hash<Word>{}(w));
      ++total;
    }
  }
  EXPECT_EQ(hashes.size(), total);
}

}  // namespace
}  // namespace palgen
