#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace palgen {

using Letter = std::uint8_t;

// Letters are stored as their index in this string. The ordering of codes
// matches the ASCII ordering of the display characters, so comparing words by
// code is the same as comparing their printed forms.
inline constexpr std::string_view kDisplayAlphabet =
    "01abcdefghijklmnopqrstuvwxyz";
inline constexpr std::size_t kMaxDistinctLetters = 26;

char display_char(Letter letter);
// Code for a display character, or -1 if `c` is not in the alphabet.
int letter_code(char c) noexcept;

// A candidate generator: positions i..j of some word, 1-based and inclusive.
struct Interval {
  std::size_t i = 1;
  std::size_t j = 1;

  constexpr Interval() = default;
  Interval(std::size_t start, std::size_t end);

  std::size_t length() const noexcept { return j - i + 1; }
  bool contains(std::size_t k) const noexcept { return i <= k && k <= j; }
  bool trivial() const noexcept { return i == j; }

  friend auto operator<=>(const Interval&, const Interval&) = default;
};

std::string to_string(const Interval& interval);

// Finite word over a small alphabet. Immutable once built. Positions are
// 1-based in every accessor that takes a position; `letters()` exposes the
// raw sequence for algorithms that scan it.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters);

  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }

  // Letter at 1-based position `pos`; throws RangeError when out of range.
  Letter at(std::size_t pos) const;
  std::span<const Letter> letters() const noexcept { return letters_; }

  Word factor(const Interval& interval) const;
  Word reversed() const;
  // Swaps 0 and 1. Only meaningful on binary words.
  Word complemented() const;

  bool is_binary() const noexcept;
  // Number of distinct letters, card alf(w).
  std::size_t alphabet_size() const noexcept;
  std::size_t count(Letter letter) const noexcept;

  std::string str() const;

  friend Word operator+(const Word& lhs, const Word& rhs);
  friend bool operator==(const Word&, const Word&) = default;
  friend std::strong_ordering operator<=>(const Word& lhs, const Word& rhs);

 private:
  std::vector<Letter> letters_;
};

// Parses a display string. Throws ParseError naming the 1-based index of the
// first character outside the alphabet.
Word parse_word(std::string_view text);

Word single_letter_power(Letter letter, std::size_t count);

// Bit-packed binary word used by the exhaustive enumerators. Position p
// (1-based) holds bit `length - p`, so increasing `bits` walks the words of a
// fixed length in lexicographic order.
struct PackedBinary {
  std::uint64_t bits = 0;
  std::uint8_t length = 0;

  Letter at(std::size_t pos) const noexcept {
    return static_cast<Letter>((bits >> (length - pos)) & 1U);
  }
  Word to_word() const;
  static PackedBinary from_word(const Word& word);
};

inline std::uint64_t binary_word_count(std::size_t length) {
  return std::uint64_t{1} << length;
}

}  // namespace palgen

template <>
struct std::hash<palgen::Word> {
  std::size_t operator()(const palgen::Word& word) const noexcept;
};
