#include "palgen/psi.hpp"

#include <limits>
#include <unordered_map>

#include "palgen/error.hpp"
#include "palgen/parallel.hpp"

namespace palgen {

namespace {

constexpr std::int64_t kUnbounded = std::numeric_limits<std::int64_t>::max();

std::int64_t rank_of(const MuResult& r, std::size_t cap) {
  switch (r.outcome) {
    case MuResult::Outcome::Exact:
      return static_cast<std::int64_t>(r.value);
    case MuResult::Outcome::AboveCap:
      return static_cast<std::int64_t>(cap) + 1;
    case MuResult::Outcome::Infinite:
      return static_cast<std::int64_t>(cap) + 2;
  }
  return 0;
}

}  // namespace

int compare_mu(const MuResult& a, const MuResult& b) {
  if (a.outcome != b.outcome) {
    return static_cast<int>(a.outcome) < static_cast<int>(b.outcome) ? -1 : 1;
  }
  if (a.is_exact() && a.value != b.value) return a.value < b.value ? -1 : 1;
  return 0;
}

PsiScanResult psi_scan(const Source& source, std::size_t prefix_len, std::size_t factor_cap,
                       std::size_t mu_cap, unsigned threads) {
  if (prefix_len > kMaxPsiPrefix) {
    throw ResourceError("psi scan prefix length is limited to " + std::to_string(kMaxPsiPrefix));
  }
  if (factor_cap > kMaxPsiFactorLength) {
    throw ResourceError("psi scan factor cap is limited to " + std::to_string(kMaxPsiFactorLength));
  }
  if (mu_cap > kMaxPsiMuCap) {
    throw ResourceError("psi scan mu cap is limited to " + std::to_string(kMaxPsiMuCap));
  }

  PsiScanResult result;
  result.source = source;
  result.prefix_len = prefix_len;
  result.factor_cap = factor_cap;
  result.mu_cap = mu_cap;
  result.max_mu = MuResult::exact(GeneratorSet(0));

  const Word prefix = source.prefix(prefix_len);
  const std::size_t n = prefix.size();
  const std::size_t top = std::min(factor_cap, n);

  std::int64_t best = -1;
  // Per level: id of the factor starting at each (0-based) position, and the
  // upper bound on mu known for each distinct factor.
  std::vector<std::size_t> longer_ids;
  std::vector<std::int64_t> longer_bounds;

  for (std::size_t len = top; len >= 1; --len) {
    const std::size_t starts = n - len + 1;
    std::unordered_map<Word, std::size_t> index;
    std::vector<Word> words;
    std::vector<std::size_t> ids(starts);
    for (std::size_t s = 0; s < starts; ++s) {
      Word v = prefix.factor({s + 1, s + len});
      auto [it, inserted] = index.try_emplace(v, words.size());
      if (inserted) words.push_back(std::move(v));
      ids[s] = it->second;
    }

    std::vector<std::int64_t> bounds(words.size(), kUnbounded);
    if (!longer_ids.empty()) {
      for (std::size_t s = 0; s < starts; ++s) {
        std::int64_t& b = bounds[ids[s]];
        if (s > 0) b = std::min(b, longer_bounds[longer_ids[s - 1]]);
        if (s < longer_ids.size()) b = std::min(b, longer_bounds[longer_ids[s]]);
      }
    }

    std::vector<std::size_t> todo;
    for (std::size_t id = 0; id < words.size(); ++id) {
      if (bounds[id] >= best) todo.push_back(id);
    }
    std::vector<MuResult> computed(todo.size());
    parallel_for(todo.size(), threads,
                 [&](std::size_t k, unsigned) { computed[k] = mu(words[todo[k]], mu_cap); });

    for (std::size_t k = 0; k < todo.size(); ++k) {
      const std::size_t id = todo[k];
      const std::int64_t r = rank_of(computed[k], mu_cap);
      if (computed[k].is_exact()) bounds[id] = std::min(bounds[id], r);
      if (r > best || (r == best && words[id] < result.argmax_factor)) {
        best = r;
        result.max_mu = computed[k];
        result.argmax_factor = words[id];
      }
    }
    result.distinct_factors += words.size();
    result.evaluated += todo.size();
    longer_ids = std::move(ids);
    longer_bounds = std::move(bounds);
  }
  return result;
}

}  // namespace palgen
