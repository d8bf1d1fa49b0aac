#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "palgen/word.hpp"

namespace palgen {

// A set of intervals targeting words of length n. Kept sorted by (i,j) with
// duplicates removed; every interval satisfies 1 <= i <= j <= n.
class GeneratorSet {
 public:
  GeneratorSet() = default;
  explicit GeneratorSet(std::size_t n) : n_(n) {}
  GeneratorSet(std::size_t n, std::vector<Interval> intervals);
  GeneratorSet(std::size_t n, std::initializer_list<Interval> intervals)
      : GeneratorSet(n, std::vector<Interval>(intervals)) {}

  std::size_t n() const noexcept { return n_; }
  std::size_t size() const noexcept { return intervals_.size(); }
  bool empty() const noexcept { return intervals_.empty(); }
  const std::vector<Interval>& intervals() const noexcept { return intervals_; }
  auto begin() const noexcept { return intervals_.begin(); }
  auto end() const noexcept { return intervals_.end(); }

  // Returns false if the interval was already present.
  bool insert(const Interval& interval);
  bool contains(const Interval& interval) const;

  friend bool operator==(const GeneratorSet&, const GeneratorSet&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Interval> intervals_;
};

// Equivalence classes over positions 1..n. Each class is sorted ascending and
// classes are ordered by their smallest position.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<std::vector<std::size_t>> classes);

  std::size_t size() const noexcept { return classes_.size(); }
  const std::vector<std::vector<std::size_t>>& classes() const noexcept { return classes_; }
  std::size_t element_count() const noexcept { return element_count_; }

  // Every class of *this lies inside some class of `coarser`.
  bool refines(const Partition& coarser) const;

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<std::vector<std::size_t>> classes_;
  std::size_t element_count_ = 0;
};

// i + j - k. Throws RangeError when k lies outside the interval.
std::size_t reflect(const Interval& interval, std::size_t k);

// Finest partition where k ~ reflect(I, k) for every I in the set.
Partition closure(const GeneratorSet& set);

// Positions grouped by letter.
Partition letter_partition(const Word& w);

// True iff every interval is a palindrome of w and the closure has exactly
// card alf(w) classes. Throws DimensionError when set.n() != |w|.
bool generates(const GeneratorSet& set, const Word& w);

struct Leaf {
  std::size_t position = 0;
  Letter label = 0;
  friend bool operator==(const Leaf&, const Leaf&) = default;
};

// Positions moved by at most one interval of the set. Requires
// generates(set, w); throws ContractError otherwise.
std::vector<Leaf> leaves(const GeneratorSet& set, const Word& w);

}  // namespace palgen
