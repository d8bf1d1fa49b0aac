#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "palgen/word.hpp"

namespace palgen {

// First `len` letters of the Thue-Morse word, t_n = parity of the binary
// digit sum of n.
Word thue_morse_prefix(std::size_t len);

// tau^k(0) for tau(0) = 01, tau(1) = 10. Length 2^k; k above
// kMaxTauIterations throws ResourceError.
inline constexpr std::size_t kMaxTauIterations = 20;
Word tau_iterate(std::size_t k);

struct DirectiveSequence {
  std::vector<std::size_t> terms;  // every term >= 1

  DirectiveSequence() = default;
  explicit DirectiveSequence(std::vector<std::size_t> values);

  std::string str() const;  // "1,1,2"
  static DirectiveSequence parse(std::string_view text);
};

// Standard word s_m for the least m >= 0 with |s_m| >= min_len, where
// s_{-1} = 1, s_0 = 0 and s_m = s_{m-1}^{d_m} s_{m-2}. Throws ContractError if
// min_len == 0 and RangeError if the directive runs out first.
Word standard_word(const DirectiveSequence& d, std::size_t min_len);

// Prefix of length `len` of the characteristic word obtained by repeating the
// directive cyclically. Empty directives yield the seed "0".
Word standard_prefix(const DirectiveSequence& d, std::size_t len);

// Subset of {0,1}.
struct DoublingSet {
  bool zero = false;
  bool one = false;

  bool contains(Letter letter) const noexcept { return letter == 0 ? zero : (letter == 1 && one); }
  std::string str() const;  // "", "0", "1" or "01"
  static DoublingSet parse(std::string_view text);

  friend bool operator==(const DoublingSet&, const DoublingSet&) = default;
};

// d_A(w): letters of A are squared. Binary words only.
Word double_word(const Word& w, const DoublingSet& A);

// A(w): a is in A(w) iff w has no factor b·a^(2k+1)·b with b != a.
DoublingSet doubling_set(const Word& w);

struct LeanResult {
  DoublingSet A;
  Word lean;
};

// Shortest u with w a factor of d_{A(w)}(u).
LeanResult lean(const Word& w);

// w is a factor of some double Sturmian word, decided by balance of the lean
// word.
bool is_double_sturmian_factor(const Word& w);

}  // namespace palgen
