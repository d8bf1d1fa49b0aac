#pragma once

#include <optional>

#include "palgen/generators.hpp"
#include "palgen/word.hpp"

namespace palgen {

// All intervals whose factor is a·b^k·a with {a,b} = {0,1}, k >= 0. Generates
// every nonempty binary word. Throws DomainError on non-binary input and
// UndefinedInputError on the empty word.
GeneratorSet witness_su(const Word& w);

// Three-generator set for w = a·x·b with {a,b} = {0,1} and x central but not
// a letter power: with x = u·01·v (after swapping letters when a = 1) the set
// is {(1,|u|+2), (|w|-|v|-1,|w|), (2,|x|+1)}. Nothing when w has another shape.
std::optional<GeneratorSet> witness_three(const Word& w);

struct Dilation {
  GeneratorSet set;
  Word word;
  // A trivial generator (i,i) at the first occurrence of the letter was added
  // before dilating, because no odd generator was centered on that letter.
  bool appended_trivial = false;
};

// Carries a generating set of w over to the image of w under doubling of
// `letter`. Each (i,j) becomes (|d(w[1,i-1])|+1, |d(w[1,j])|). The result
// generates the doubled word and has at most one more interval. Throws
// ContractError unless set generates w.
Dilation dilate(const GeneratorSet& set, const Word& w, Letter letter);

// True when some odd-length interval of the set is centered on an
// occurrence of `letter`.
bool has_centered_odd_generator(const GeneratorSet& set, const Word& w, Letter letter);

}  // namespace palgen
