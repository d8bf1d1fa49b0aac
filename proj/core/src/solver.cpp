#include "palgen/solver.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "palgen/combinatorics.hpp"
#include "palgen/disjoint_set.hpp"

namespace palgen {

MuResult MuResult::exact(GeneratorSet witness) {
  MuResult r;
  r.outcome = Outcome::Exact;
  r.value = witness.size();
  r.witness = std::move(witness);
  return r;
}

MuResult MuResult::above_cap(std::size_t cap, std::size_t lower_bound) {
  MuResult r;
  r.outcome = Outcome::AboveCap;
  r.cap = cap;
  r.lower_bound = lower_bound;
  return r;
}

MuResult MuResult::infinite() {
  MuResult r;
  r.outcome = Outcome::Infinite;
  return r;
}

namespace {

using Pos = std::uint16_t;

struct Candidate {
  Interval interval;
  std::vector<std::pair<Pos, Pos>> pairs;  // 0-based reflected pairs
  std::uint32_t capacity = 0;              // pairs.size() == floor(len/2)
};

std::vector<Candidate> build_candidates(const Word& w) {
  std::vector<Candidate> out;
  for (const auto& iv : palindromic_intervals(w, false)) {
    Candidate c;
    c.interval = iv;
    for (std::size_t a = iv.i, b = iv.j; a < b; ++a, --b) {
      c.pairs.emplace_back(static_cast<Pos>(a - 1), static_cast<Pos>(b - 1));
    }
    c.capacity = static_cast<std::uint32_t>(c.pairs.size());
    out.push_back(std::move(c));
  }
  std::stable_sort(out.begin(), out.end(), [](const Candidate& a, const Candidate& b) {
    if (a.capacity != b.capacity) return a.capacity > b.capacity;
    return a.interval < b.interval;
  });
  return out;
}

// Union-find state small enough to copy per search level.
struct State {
  std::vector<Pos> parent;
  std::size_t classes = 0;
  std::array<std::uint16_t, kMaxDistinctLetters> letter_classes{};

  Pos find(Pos x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
};

class Search {
 public:
  Search(const Word& w, std::vector<Candidate> candidates)
      : cands_(std::move(candidates)), n_(w.size()) {
    // Dense letter indices 0..alf-1.
    std::array<int, kDisplayAlphabet.size()> dense;
    dense.fill(-1);
    for (Letter l : w.letters()) {
      if (dense[l] < 0) dense[l] = static_cast<int>(alf_++);
    }
    letter_.resize(n_);
    for (std::size_t k = 0; k < n_; ++k) letter_[k] = static_cast<std::uint8_t>(dense[w.letters()[k]]);

    const std::size_t m = cands_.size();
    prefix_cap_.assign(m + 1, 0);
    for (std::size_t k = 0; k < m; ++k) prefix_cap_[k + 1] = prefix_cap_[k] + cands_[k].capacity;

    // suffix_max_[idx * alf + c]: max pairs of letter c in any candidate >= idx.
    suffix_max_.assign((m + 1) * alf_, 0);
    for (std::size_t idx = m; idx-- > 0;) {
      std::array<std::uint32_t, kMaxDistinctLetters> per{};
      for (auto [a, b] : cands_[idx].pairs) ++per[letter_[a]];
      for (std::size_t c = 0; c < alf_; ++c) {
        suffix_max_[idx * alf_ + c] = std::max(per[c], suffix_max_[(idx + 1) * alf_ + c]);
      }
    }

    root_.parent.resize(n_);
    std::iota(root_.parent.begin(), root_.parent.end(), Pos{0});
    root_.classes = n_;
    for (std::size_t k = 0; k < n_; ++k) ++root_.letter_classes[letter_[k]];
  }

  std::size_t alphabet() const noexcept { return alf_; }
  const std::vector<Candidate>& candidates() const noexcept { return cands_; }

  bool full_set_generates() const {
    State s = root_;
    for (const auto& c : cands_) apply_tracked(s, c);
    return s.classes == alf_;
  }

  // Smallest k the capacity arguments allow.
  std::size_t lower_bound() const {
    const std::size_t need = n_ - alf_;
    std::size_t k = 0;
    while (k < cands_.size() && prefix_cap_[k] < need) ++k;
    for (std::size_t c = 0; c < alf_; ++c) {
      const std::size_t need_c = root_.letter_classes[c] - 1u;
      const std::size_t best = suffix_max_.empty() ? 0 : suffix_max_[c];
      if (need_c > 0 && best > 0) k = std::max(k, (need_c + best - 1) / best);
    }
    return k;
  }

  // Searches subsets of exactly `k` candidates; fills `chosen` on success.
  bool run(std::size_t k, std::uint64_t& nodes) {
    k_ = k;
    nodes_ = &nodes;
    stack_.assign(k + 1, root_);
    chosen_.clear();
    return dfs(0, 0);
  }

  GeneratorSet witness() const {
    GeneratorSet set(n_);
    for (std::size_t idx : chosen_) set.insert(cands_[idx].interval);
    return set;
  }

 private:
  std::size_t apply_tracked(State& s, const Candidate& c) const {
    std::size_t merged = 0;
    for (auto [a, b] : c.pairs) {
      Pos ra = s.find(a);
      Pos rb = s.find(b);
      if (ra == rb) continue;
      if (ra > rb) std::swap(ra, rb);
      s.parent[rb] = ra;
      --s.classes;
      --s.letter_classes[letter_[a]];
      ++merged;
    }
    return merged;
  }

  bool dfs(std::size_t depth, std::size_t start) {
    ++*nodes_;
    const State& st = stack_[depth];
    if (st.classes == alf_) return true;
    const std::size_t remaining = k_ - depth;
    if (remaining == 0) return false;
    const std::size_t need = st.classes - alf_;
    const std::size_t m = cands_.size();
    for (std::size_t idx = start; idx < m; ++idx) {
      // Candidates are sorted by capacity, so once the best `remaining` of
      // them cannot supply the missing merges, no later start can either.
      const std::size_t hi = std::min(m, idx + remaining);
      if (prefix_cap_[hi] - prefix_cap_[idx] < need) break;
      bool letter_short = false;
      for (std::size_t c = 0; c < alf_ && !letter_short; ++c) {
        const std::size_t need_c = st.letter_classes[c] - 1u;
        letter_short = need_c > remaining * suffix_max_[idx * alf_ + c];
      }
      if (letter_short) break;

      State& next = stack_[depth + 1];
      next.parent = st.parent;
      next.classes = st.classes;
      next.letter_classes = st.letter_classes;
      // A candidate that merges nothing new can be dropped from any generating
      // set, so it never belongs to a minimal one.
      if (apply_tracked(next, cands_[idx]) == 0) continue;
      chosen_.push_back(idx);
      if (dfs(depth + 1, idx + 1)) return true;
      chosen_.pop_back();
    }
    return false;
  }

  std::vector<Candidate> cands_;
  std::size_t n_ = 0;
  std::size_t alf_ = 0;
  std::vector<std::uint8_t> letter_;
  std::vector<std::uint64_t> prefix_cap_;
  std::vector<std::uint32_t> suffix_max_;
  State root_;

  std::size_t k_ = 0;
  std::uint64_t* nodes_ = nullptr;
  std::vector<State> stack_;
  std::vector<std::size_t> chosen_;
};

}  // namespace

std::vector<Interval> canonical_candidates(const Word& w) {
  std::vector<Interval> out;
  for (const auto& c : build_candidates(w)) out.push_back(c.interval);
  return out;
}

MuResult mu(const Word& w, std::optional<std::size_t> cap, SolverStats* stats) {
  SolverStats local;
  SolverStats& st = stats ? *stats : local;
  st = SolverStats{};

  const std::size_t n = w.size();
  const std::size_t alf = w.alphabet_size();
  if (alf == n) return MuResult::exact(GeneratorSet(n));

  Search search(w, build_candidates(w));
  st.candidates = search.candidates().size();
  if (!search.full_set_generates()) return MuResult::infinite();

  const std::size_t lb = std::max<std::size_t>(1, search.lower_bound());
  st.initial_lower_bound = lb;
  if (cap && lb > *cap) return MuResult::above_cap(*cap, lb);

  const std::size_t last = cap ? std::min(*cap, search.candidates().size())
                               : search.candidates().size();
  for (std::size_t k = lb; k <= last; ++k) {
    if (search.run(k, st.nodes)) return MuResult::exact(search.witness());
  }
  // The full candidate set generates, so only a cap can get us here.
  return MuResult::above_cap(*cap, *cap + 1);
}

std::vector<GeneratorSet> generating_sets(const Word& w, std::size_t max_size) {
  const auto universe = palindromic_intervals(w, false);
  const std::size_t n = w.size();
  const std::size_t alf = w.alphabet_size();
  std::vector<GeneratorSet> out;
  std::vector<std::size_t> chosen;

  auto recurse = [&](auto&& self, std::size_t start, const DisjointSet& ds) -> void {
    if (ds.class_count() == alf) {
      GeneratorSet set(n);
      for (std::size_t idx : chosen) set.insert(universe[idx]);
      out.push_back(std::move(set));
    }
    if (chosen.size() == max_size) return;
    for (std::size_t idx = start; idx < universe.size(); ++idx) {
      DisjointSet next = ds;
      const auto& iv = universe[idx];
      for (std::size_t a = iv.i, b = iv.j; a < b; ++a, --b) {
        next.unite(static_cast<std::uint32_t>(a - 1), static_cast<std::uint32_t>(b - 1));
      }
      chosen.push_back(idx);
      self(self, idx + 1, next);
      chosen.pop_back();
    }
  };
  recurse(recurse, 0, DisjointSet(n));
  return out;
}

}  // namespace palgen
