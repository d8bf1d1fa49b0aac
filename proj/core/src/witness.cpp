#include "palgen/witness.hpp"

#include "palgen/combinatorics.hpp"
#include "palgen/error.hpp"

namespace palgen {

GeneratorSet witness_su(const Word& w) {
  if (!w.is_binary()) throw DomainError("S_u construction requires a binary word");
  if (w.empty()) throw UndefinedInputError("S_u construction is undefined for the empty word");
  const auto s = w.letters();
  const std::size_t n = s.size();
  GeneratorSet set(n);
  // Each a·b^k·a starts at some a and runs through a maximal block of b.
  for (std::size_t start = 0; start + 1 < n; ++start) {
    const Letter a = s[start];
    std::size_t end = start + 1;
    if (s[end] == a) {
      set.insert({start + 1, end + 1});
      continue;
    }
    while (end < n && s[end] != a) ++end;
    if (end < n) set.insert({start + 1, end + 1});
  }
  return set;
}

std::optional<GeneratorSet> witness_three(const Word& w) {
  if (!w.is_binary() || w.size() < 3) return std::nullopt;
  const auto s = w.letters();
  if (s.front() == s.back()) return std::nullopt;
  // Generation is invariant under renaming letters, so work on 0·x·1.
  const Word oriented = s.front() == 0 ? w : w.complemented();
  const std::size_t n = oriented.size();
  const Word x = oriented.factor({2, n - 1});
  const auto cert = is_central(x);
  if (!cert || cert->kind != CentralCertificate::Kind::Composite) return std::nullopt;
  const std::size_t u_len = cert->u.size();
  const std::size_t v_len = cert->v.size();
  return GeneratorSet(n, {Interval{1, u_len + 2}, Interval{n - v_len - 1, n},
                          Interval{2, x.size() + 1}});
}

bool has_centered_odd_generator(const GeneratorSet& set, const Word& w, Letter letter) {
  for (const auto& iv : set) {
    if (iv.length() % 2 == 1 && w.at((iv.i + iv.j) / 2) == letter) return true;
  }
  return false;
}

Dilation dilate(const GeneratorSet& set, const Word& w, Letter letter) {
  if (!generates(set, w)) {
    throw ContractError("dilate requires a set that generates \"" + w.str() + "\"");
  }
  const auto where = occurrences(w, letter);
  if (where.empty()) return Dilation{set, w, false};

  GeneratorSet source = set;
  bool appended = false;
  if (!has_centered_odd_generator(set, w, letter)) {
    source.insert({where.front(), where.front()});
    appended = true;
  }

  // doubled_prefix[t] = |d(w[1,t])|
  std::vector<std::size_t> doubled_prefix(w.size() + 1, 0);
  for (std::size_t t = 1; t <= w.size(); ++t) {
    doubled_prefix[t] = doubled_prefix[t - 1] + (w.at(t) == letter ? 2 : 1);
  }
  Word doubled = double_letter(w, letter);
  GeneratorSet image(doubled.size());
  for (const auto& iv : source) {
    image.insert({doubled_prefix[iv.i - 1] + 1, doubled_prefix[iv.j]});
  }
  return Dilation{std::move(image), std::move(doubled), appended};
}

}  // namespace palgen
