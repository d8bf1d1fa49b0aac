#include "palgen/word.hpp"

#include <algorithm>
#include <array>

#include "palgen/error.hpp"

namespace palgen {

char display_char(Letter letter) {
  if (letter >= kDisplayAlphabet.size()) {
    throw RangeError("letter code " + std::to_string(letter) + " has no display character");
  }
  return kDisplayAlphabet[letter];
}

int letter_code(char c) noexcept {
  if (c == '0' || c == '1') return c - '0';
  if (c >= 'a' && c <= 'z') return 2 + (c - 'a');
  return -1;
}

Interval::Interval(std::size_t start, std::size_t end) : i(start), j(end) {
  if (start < 1 || start > end) {
    throw RangeError("invalid interval " + to_string(*this) + ": need 1 <= i <= j");
  }
}

std::string to_string(const Interval& interval) {
  return "(" + std::to_string(interval.i) + "," + std::to_string(interval.j) + ")";
}

namespace {

std::size_t distinct_letters(std::span<const Letter> letters) {
  std::array<bool, kDisplayAlphabet.size()> seen{};
  std::size_t distinct = 0;
  for (Letter l : letters) {
    if (!seen[l]) {
      seen[l] = true;
      ++distinct;
    }
  }
  return distinct;
}

}  // namespace

Word::Word(std::vector<Letter> letters) : letters_(std::move(letters)) {
  for (std::size_t k = 0; k < letters_.size(); ++k) {
    if (letters_[k] >= kDisplayAlphabet.size()) {
      throw ParseError("letter code out of range at index " + std::to_string(k + 1), k + 1);
    }
  }
  if (distinct_letters(letters_) > kMaxDistinctLetters) {
    throw DomainError("word uses more than 26 distinct letters");
  }
}

Letter Word::at(std::size_t pos) const {
  if (pos < 1 || pos > letters_.size()) {
    throw RangeError("position " + std::to_string(pos) + " outside word of length " +
                     std::to_string(letters_.size()));
  }
  return letters_[pos - 1];
}

Word Word::factor(const Interval& interval) const {
  if (interval.j > letters_.size()) {
    throw RangeError("interval " + to_string(interval) + " outside word of length " +
                     std::to_string(letters_.size()));
  }
  Word out;
  out.letters_.assign(letters_.begin() + static_cast<std::ptrdiff_t>(interval.i - 1),
                      letters_.begin() + static_cast<std::ptrdiff_t>(interval.j));
  return out;
}

Word Word::reversed() const {
  Word out = *this;
  std::reverse(out.letters_.begin(), out.letters_.end());
  return out;
}

Word Word::complemented() const {
  Word out = *this;
  for (Letter& l : out.letters_) {
    if (l <= 1) l = static_cast<Letter>(1 - l);
  }
  return out;
}

bool Word::is_binary() const noexcept {
  return std::all_of(letters_.begin(), letters_.end(), [](Letter l) { return l <= 1; });
}

std::size_t Word::alphabet_size() const noexcept { return distinct_letters(letters_); }

std::size_t Word::count(Letter letter) const noexcept {
  return static_cast<std::size_t>(std::count(letters_.begin(), letters_.end(), letter));
}

std::string Word::str() const {
  std::string out;
  out.reserve(letters_.size());
  for (Letter l : letters_) out.push_back(kDisplayAlphabet[l]);
  return out;
}

Word operator+(const Word& lhs, const Word& rhs) {
  std::vector<Letter> joined;
  joined.reserve(lhs.size() + rhs.size());
  joined.insert(joined.end(), lhs.letters_.begin(), lhs.letters_.end());
  joined.insert(joined.end(), rhs.letters_.begin(), rhs.letters_.end());
  return Word(std::move(joined));
}

std::strong_ordering operator<=>(const Word& lhs, const Word& rhs) {
  return std::lexicographical_compare_three_way(lhs.letters_.begin(), lhs.letters_.end(),
                                                rhs.letters_.begin(), rhs.letters_.end());
}

Word parse_word(std::string_view text) {
  std::vector<Letter> letters;
  letters.reserve(text.size());
  std::array<bool, kDisplayAlphabet.size()> seen{};
  std::size_t distinct = 0;
  for (std::size_t k = 0; k < text.size(); ++k) {
    const int code = letter_code(text[k]);
    if (code < 0) {
      throw ParseError("invalid character '" + std::string(1, text[k]) + "' at index " +
                           std::to_string(k + 1),
                       k + 1);
    }
    if (!seen[static_cast<std::size_t>(code)]) {
      seen[static_cast<std::size_t>(code)] = true;
      if (++distinct > kMaxDistinctLetters) {
        throw ParseError("more than 26 distinct letters (index " + std::to_string(k + 1) + ")",
                         k + 1);
      }
    }
    letters.push_back(static_cast<Letter>(code));
  }
  return Word(std::move(letters));
}

Word single_letter_power(Letter letter, std::size_t count) {
  return Word(std::vector<Letter>(count, letter));
}

Word PackedBinary::to_word() const {
  std::vector<Letter> letters(length);
  for (std::size_t p = 1; p <= length; ++p) letters[p - 1] = at(p);
  return Word(std::move(letters));
}

PackedBinary PackedBinary::from_word(const Word& word) {
  if (!word.is_binary()) throw DomainError("packed form requires a binary word");
  if (word.size() > 63) throw ResourceError("packed form holds at most 63 letters");
  PackedBinary packed;
  packed.length = static_cast<std::uint8_t>(word.size());
  for (Letter l : word.letters()) packed.bits = (packed.bits << 1) | l;
  return packed;
}

}  // namespace palgen

std::size_t std::hash<palgen::Word>::operator()(const palgen::Word& word) const noexcept {
  // FNV-1a over the letter codes.
  std::size_t h = 1469598103934665603ULL;
  for (palgen::Letter l : word.letters()) {
    h ^= l;
    h *= 1099511628211ULL;
  }
  return h ^ word.size();
}
