#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "palgen/sturm.hpp"
#include "palgen/word.hpp"

namespace palgen {

// Finite description of an infinite word. Only prefixes are ever built.
//
//   tm                      Thue-Morse
//   std:1,1,1               characteristic word, directive repeated cyclically
//   periodic:aababb         block repeated forever
//   double:std:1,1,1/A=0    d_A applied to a characteristic word
struct Source {
  enum class Kind { ThueMorse, Standard, Periodic, DoubledStandard };

  Kind kind = Kind::ThueMorse;
  DirectiveSequence directive;  // Standard, DoubledStandard
  Word block;                   // Periodic
  DoublingSet doubling;         // DoubledStandard

  std::string str() const;
  static Source parse(std::string_view text);

  Word prefix(std::size_t len) const;
};

inline constexpr std::size_t kMaxSourcePrefix = 1'000'000;

}  // namespace palgen
