#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "palgen/generators.hpp"
#include "palgen/word.hpp"

namespace palgen {

// Outcome of the exact search for the least number of palindromic generators.
struct MuResult {
  enum class Outcome { Exact, AboveCap, Infinite };

  Outcome outcome = Outcome::Exact;
  std::size_t value = 0;        // Exact only
  GeneratorSet witness;         // Exact only; |witness| == value
  std::size_t cap = 0;          // AboveCap only
  std::size_t lower_bound = 0;  // AboveCap only; proven mu >= lower_bound > cap

  static MuResult exact(GeneratorSet witness);
  static MuResult above_cap(std::size_t cap, std::size_t lower_bound);
  static MuResult infinite();

  bool is_exact() const noexcept { return outcome == Outcome::Exact; }
  bool is_infinite() const noexcept { return outcome == Outcome::Infinite; }
  bool is_above_cap() const noexcept { return outcome == Outcome::AboveCap; }

  // True when the result proves mu <= k.
  bool at_most(std::size_t k) const noexcept { return is_exact() && value <= k; }
};

struct SolverStats {
  std::uint64_t nodes = 0;           // partial subsets expanded
  std::size_t candidates = 0;        // nontrivial palindromic intervals
  std::size_t initial_lower_bound = 0;
};

// Exact mu(w). Searches subsets of the nontrivial palindromic intervals of w
// by iterative deepening, in canonical order (descending floor(len/2), then
// (i,j)), so the witness is the first minimal set in that order. With a cap,
// the search stops after exhausting size `cap` and reports AboveCap.
MuResult mu(const Word& w, std::optional<std::size_t> cap = std::nullopt,
            SolverStats* stats = nullptr);

// The candidate universe in canonical search order.
std::vector<Interval> canonical_candidates(const Word& w);

// Every subset of the nontrivial palindromic intervals with at most
// `max_size` elements that generates w. Exhaustive; meant for small words.
std::vector<GeneratorSet> generating_sets(const Word& w, std::size_t max_size);

}  // namespace palgen
