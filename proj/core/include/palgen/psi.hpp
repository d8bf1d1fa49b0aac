#pragma once

#include <cstddef>
#include <cstdint>

#include "palgen/solver.hpp"
#include "palgen/source.hpp"
#include "palgen/word.hpp"

namespace palgen {

inline constexpr std::size_t kMaxPsiPrefix = 4096;
inline constexpr std::size_t kMaxPsiFactorLength = 40;
inline constexpr std::size_t kMaxPsiMuCap = 12;

struct PsiScanResult {
  Source source;
  std::size_t prefix_len = 0;
  std::size_t factor_cap = 0;
  std::size_t mu_cap = 0;
  MuResult max_mu;     // witness refers to argmax_factor
  Word argmax_factor;  // lexicographically least factor reaching max_mu
  std::uint64_t distinct_factors = 0;
  std::uint64_t evaluated = 0;  // factors that actually ran the solver
};

// Orders mu outcomes: every exact value < AboveCap < Infinite. Two AboveCap
// results compare equal.
int compare_mu(const MuResult& a, const MuResult& b);

// Largest mu(v, mu_cap) over the distinct factors v of the prefix with
// 1 <= |v| <= factor_cap. A factor is skipped when some longer factor
// containing it already has a smaller exact mu than the current maximum
// (mu is monotone under taking factors), which never changes the answer.
PsiScanResult psi_scan(const Source& source, std::size_t prefix_len, std::size_t factor_cap,
                       std::size_t mu_cap, unsigned threads = 1);

}  // namespace palgen
