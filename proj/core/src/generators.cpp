#include "palgen/generators.hpp"

#include <algorithm>
#include <map>

#include "palgen/disjoint_set.hpp"
#include "palgen/error.hpp"

namespace palgen {

namespace {

void check_bounds(std::size_t n, const Interval& interval) {
  if (interval.i < 1 || interval.i > interval.j || interval.j > n) {
    throw RangeError("interval " + to_string(interval) + " does not fit a word of length " +
                     std::to_string(n));
  }
}

bool is_palindromic_in(const Word& w, const Interval& interval) {
  const auto s = w.letters();
  for (std::size_t a = interval.i - 1, b = interval.j - 1; a < b; ++a, --b) {
    if (s[a] != s[b]) return false;
  }
  return true;
}

Partition partition_from(DisjointSet& ds) {
  std::map<std::uint32_t, std::vector<std::size_t>> by_root;
  for (std::uint32_t k = 0; k < ds.element_count(); ++k) by_root[ds.find(k)].push_back(k + 1);
  std::vector<std::vector<std::size_t>> classes;
  classes.reserve(by_root.size());
  for (auto& [root, members] : by_root) classes.push_back(std::move(members));
  return Partition(std::move(classes));
}

}  // namespace

GeneratorSet::GeneratorSet(std::size_t n, std::vector<Interval> intervals)
    : n_(n), intervals_(std::move(intervals)) {
  for (const auto& iv : intervals_) check_bounds(n_, iv);
  std::sort(intervals_.begin(), intervals_.end());
  intervals_.erase(std::unique(intervals_.begin(), intervals_.end()), intervals_.end());
}

bool GeneratorSet::insert(const Interval& interval) {
  check_bounds(n_, interval);
  auto it = std::lower_bound(intervals_.begin(), intervals_.end(), interval);
  if (it != intervals_.end() && *it == interval) return false;
  intervals_.insert(it, interval);
  return true;
}

bool GeneratorSet::contains(const Interval& interval) const {
  return std::binary_search(intervals_.begin(), intervals_.end(), interval);
}

Partition::Partition(std::vector<std::vector<std::size_t>> classes) : classes_(std::move(classes)) {
  for (auto& c : classes_) {
    std::sort(c.begin(), c.end());
    element_count_ += c.size();
  }
  std::erase_if(classes_, [](const auto& c) { return c.empty(); });
  std::sort(classes_.begin(), classes_.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
}

bool Partition::refines(const Partition& coarser) const {
  if (element_count_ != coarser.element_count_) return false;
  std::vector<std::size_t> owner(element_count_ + 1, 0);
  for (std::size_t c = 0; c < coarser.classes_.size(); ++c) {
    for (std::size_t pos : coarser.classes_[c]) owner[pos] = c;
  }
  return std::all_of(classes_.begin(), classes_.end(), [&](const auto& cls) {
    return std::all_of(cls.begin(), cls.end(),
                       [&](std::size_t pos) { return owner[pos] == owner[cls.front()]; });
  });
}

std::size_t reflect(const Interval& interval, std::size_t k) {
  if (!interval.contains(k)) {
    throw RangeError("position " + std::to_string(k) + " outside interval " + to_string(interval));
  }
  return interval.i + interval.j - k;
}

Partition closure(const GeneratorSet& set) {
  DisjointSet ds(set.n());
  for (const auto& iv : set) {
    for (std::size_t a = iv.i, b = iv.j; a < b; ++a, --b) {
      ds.unite(static_cast<std::uint32_t>(a - 1), static_cast<std::uint32_t>(b - 1));
    }
  }
  return partition_from(ds);
}

Partition letter_partition(const Word& w) {
  std::map<Letter, std::vector<std::size_t>> by_letter;
  for (std::size_t p = 1; p <= w.size(); ++p) by_letter[w.at(p)].push_back(p);
  std::vector<std::vector<std::size_t>> classes;
  for (auto& [letter, members] : by_letter) classes.push_back(std::move(members));
  return Partition(std::move(classes));
}

bool generates(const GeneratorSet& set, const Word& w) {
  if (set.n() != w.size()) {
    throw DimensionError("generator set targets length " + std::to_string(set.n()) +
                         " but the word has length " + std::to_string(w.size()));
  }
  for (const auto& iv : set) {
    if (!is_palindromic_in(w, iv)) return false;
  }
  // With every generator palindromic the closure refines the letter classes,
  // so equal class counts mean equal partitions.
  DisjointSet ds(w.size());
  for (const auto& iv : set) {
    for (std::size_t a = iv.i, b = iv.j; a < b; ++a, --b) {
      ds.unite(static_cast<std::uint32_t>(a - 1), static_cast<std::uint32_t>(b - 1));
    }
  }
  return ds.class_count() == w.alphabet_size();
}

std::vector<Leaf> leaves(const GeneratorSet& set, const Word& w) {
  if (!generates(set, w)) {
    throw ContractError("leaves requires a generating set for \"" + w.str() + "\"");
  }
  std::vector<std::size_t> moving(w.size() + 1, 0);
  for (const auto& iv : set) {
    for (std::size_t k = iv.i; k <= iv.j; ++k) {
      if (reflect(iv, k) != k) ++moving[k];
    }
  }
  std::vector<Leaf> out;
  for (std::size_t m = 1; m <= w.size(); ++m) {
    if (moving[m] <= 1) out.push_back({m, w.at(m)});
  }
  return out;
}

}  // namespace palgen
