#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "palgen/word.hpp"

namespace palgen {

bool is_palindrome(const Word& w);

// Every (i,j) with w[i,j] a palindrome, sorted by (i,j). Center expansion,
// O(n^2) in the worst case.
std::vector<Interval> palindromic_intervals(const Word& w, bool include_trivial);

// Throws UndefinedInputError on the empty word.
bool is_unbordered(const Word& w);

// rank[code] gives the position of each letter in the order. The default is
// the natural code order ('0' < '1' < 'a' < ... ).
using LetterOrder = std::array<std::uint8_t, kDisplayAlphabet.size()>;
LetterOrder natural_order();
// Order that puts `first` before everything else; the rest keep code order.
LetterOrder order_with_first(Letter first);

// Strictly smaller than every nontrivial rotation. Throws on the empty word.
bool is_lyndon(const Word& w, const LetterOrder& order = natural_order());

// Periods p in 1..|w|, ascending; |w| is always present. Throws on empty.
std::vector<std::size_t> periods(const Word& w);
// p >= |w| is vacuously a period.
bool has_period(const Word& w, std::size_t p);

// Balance is only defined here for binary words; other inputs throw
// DomainError.
bool is_balanced(const Word& w);

struct UnbalanceWitness {
  Letter a = 0;  // a·u·a and b·u·b both occur, b = 1 - a
  Word u;        // palindrome
};
std::optional<UnbalanceWitness> unbalance_witness(const Word& w);

struct CentralCertificate {
  enum class Kind { LetterPower, Composite };
  Kind kind = Kind::LetterPower;
  // LetterPower: word = letter^power.
  Letter letter = 0;
  std::size_t power = 0;
  // Composite: word = u·01·v = v·10·u, p = |u|+2, q = |v|+2.
  Word u;
  Word v;
  std::size_t p = 0;
  std::size_t q = 0;
};

// Certificate of centrality, verified before it is returned. For composite
// words the split with the shortest u is chosen.
std::optional<CentralCertificate> is_central(const Word& w);
// Every split u·01·v = v·10·u of w, ordered by |u|. Empty for letter powers
// and non-central words.
std::vector<CentralCertificate> central_decompositions(const Word& w);

// Throw UndefinedInputError on the empty word.
Interval longest_palindromic_prefix(const Word& w);
Interval longest_palindromic_suffix(const Word& w);

std::vector<std::size_t> occurrences(const Word& w, Letter a);

// Same length and the same position-equality relation.
bool is_isomorphic(const Word& w, const Word& v);

bool contains_factor(const Word& haystack, const Word& needle);

// Image of w under the morphism that squares `a` and fixes every other
// letter. Works on any alphabet.
Word double_letter(const Word& w, Letter a);

}  // namespace palgen
