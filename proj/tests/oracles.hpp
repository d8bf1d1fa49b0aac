#pragma once

// Brute-force reference implementations. They share only the Word type with
// the library and favour obviousness over speed; keep inputs small.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <queue>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "palgen/word.hpp"

namespace oracle {

using palgen::Letter;
using palgen::Word;
using Pair = std::pair<std::size_t, std::size_t>;

inline std::string str(const Word& w) { return w.str(); }

inline Word bin(std::uint64_t bits, std::size_t len) {
  std::vector<Letter> v(len);
  for (std::size_t k = 0; k < len; ++k) v[k] = static_cast<Letter>((bits >> (len - 1 - k)) & 1U);
  return Word(v);
}

inline std::vector<Word> all_binary(std::size_t len) {
  std::vector<Word> out;
  for (std::uint64_t b = 0; b < (std::uint64_t{1} << len); ++b) out.push_back(bin(b, len));
  return out;
}

inline bool palindrome(const Word& w) {
  const auto s = w.letters();
  return std::equal(s.begin(), s.end(), s.rbegin());
}

inline Word sub(const Word& w, std::size_t i, std::size_t j) {  // 1-based inclusive
  const auto s = w.letters();
  return Word(std::vector<Letter>(s.begin() + static_cast<long>(i - 1), s.begin() + static_cast<long>(j)));
}

inline bool is_factor(const Word& needle, const Word& hay) {
  if (needle.size() > hay.size()) return false;
  for (std::size_t s = 1; s + needle.size() <= hay.size() + 1; ++s) {
    if (needle.empty() || sub(hay, s, s + needle.size() - 1) == needle) return true;
  }
  return false;
}

// Class label of every position (0-based) under the reflections of `set`.
inline std::vector<std::size_t> closure_labels(std::size_t n, const std::vector<Pair>& set) {
  std::vector<std::vector<std::size_t>> adj(n + 1);
  for (auto [i, j] : set) {
    for (std::size_t k = i; k <= j; ++k) adj[k].push_back(i + j - k);
  }
  std::vector<std::size_t> label(n + 1, 0);
  std::size_t next = 0;
  for (std::size_t p = 1; p <= n; ++p) {
    if (label[p]) continue;
    ++next;
    std::queue<std::size_t> q;
    q.push(p);
    label[p] = next;
    while (!q.empty()) {
      const std::size_t x = q.front();
      q.pop();
      for (std::size_t y : adj[x]) {
        if (!label[y]) {
          label[y] = next;
          q.push(y);
        }
      }
    }
  }
  return {label.begin() + 1, label.end()};
}

inline bool generates(const Word& w, const std::vector<Pair>& set) {
  for (auto [i, j] : set) {
    if (i < 1 || j > w.size() || i > j || !palindrome(sub(w, i, j))) return false;
  }
  const auto label = closure_labels(w.size(), set);
  for (std::size_t p = 0; p < w.size(); ++p) {
    for (std::size_t q = 0; q < w.size(); ++q) {
      if ((label[p] == label[q]) != (w.letters()[p] == w.letters()[q])) return false;
    }
  }
  return true;
}

inline std::vector<Pair> nontrivial_palindromes(const Word& w) {
  std::vector<Pair> out;
  for (std::size_t i = 1; i <= w.size(); ++i) {
    for (std::size_t j = i + 1; j <= w.size(); ++j) {
      if (palindrome(sub(w, i, j))) out.emplace_back(i, j);
    }
  }
  return out;
}

// Smallest generating set size, or nullopt for +infinity. Plain subset
// enumeration by size.
inline std::optional<std::size_t> mu(const Word& w) {
  const auto cand = nontrivial_palindromes(w);
  if (!generates(w, cand)) return std::nullopt;
  for (std::size_t k = 0; k <= cand.size(); ++k) {
    std::vector<bool> pick(cand.size(), false);
    std::fill(pick.begin(), pick.begin() + static_cast<long>(k), true);
    do {
      std::vector<Pair> set;
      for (std::size_t c = 0; c < cand.size(); ++c) {
        if (pick[c]) set.push_back(cand[c]);
      }
      if (generates(w, set)) return k;
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  return std::nullopt;
}

inline std::size_t ones(const Word& w) { return w.count(1); }

inline bool balanced(const Word& w) {
  const std::size_t n = w.size();
  for (std::size_t len = 1; len <= n; ++len) {
    std::size_t lo = len, hi = 0;
    for (std::size_t s = 1; s + len <= n + 1; ++s) {
      const std::size_t c = ones(sub(w, s, s + len - 1));
      lo = std::min(lo, c);
      hi = std::max(hi, c);
    }
    if (hi > lo + 1) return false;
  }
  return true;
}

inline bool central(const Word& w) {
  return palindrome(w) && balanced(w + Word({0})) && balanced(w + Word({1}));
}

inline bool unbordered(const Word& w) {
  for (std::size_t k = 1; k < w.size(); ++k) {
    if (sub(w, 1, k) == sub(w, w.size() - k + 1, w.size())) return false;
  }
  return true;
}

inline bool lyndon(const Word& w) {
  if (w.empty()) return false;
  const auto s = w.letters();
  for (std::size_t r = 1; r < w.size(); ++r) {
    std::vector<Letter> rot(s.begin() + static_cast<long>(r), s.end());
    rot.insert(rot.end(), s.begin(), s.begin() + static_cast<long>(r));
    if (!(w < Word(rot))) return false;
  }
  return true;
}

inline std::vector<std::size_t> periods(const Word& w) {
  std::vector<std::size_t> out;
  for (std::size_t p = 1; p <= w.size(); ++p) {
    bool ok = true;
    for (std::size_t k = 1; k + p <= w.size(); ++k) ok = ok && w.letters()[k - 1] == w.letters()[k + p - 1];
    if (ok) out.push_back(p);
  }
  return out;
}

inline Word double_letters(const Word& w, bool zero, bool one) {
  std::vector<Letter> out;
  for (Letter c : w.letters()) {
    out.push_back(c);
    if ((c == 0 && zero) || (c == 1 && one)) out.push_back(c);
  }
  return Word(out);
}

// a is eligible for un-doubling when no factor b a^(2k+1) b occurs.
inline bool undoublable(const Word& w, Letter a) {
  const Letter b = static_cast<Letter>(1 - a);
  for (std::size_t i = 1; i <= w.size(); ++i) {
    for (std::size_t j = i + 2; j <= w.size(); ++j) {
      if (w.at(i) != b || w.at(j) != b || (j - i - 1) % 2 == 0) continue;
      bool run = true;
      for (std::size_t k = i + 1; k < j; ++k) run = run && w.at(k) == a;
      if (run) return false;
    }
  }
  return true;
}

// Shortest u with w a factor of d_A(u), A = the eligible letters.
inline std::set<std::string> shortest_lean_words(const Word& w) {
  const bool zero = undoublable(w, 0);
  const bool one = undoublable(w, 1);
  for (std::size_t len = 0; len <= w.size(); ++len) {
    std::set<std::string> found;
    for (const Word& u : all_binary(len)) {
      if (is_factor(w, double_letters(u, zero, one))) found.insert(u.str());
    }
    if (!found.empty()) return found;
  }
  return {};
}

// w is a factor of d_A(u) for some A and some balanced u.
inline bool double_sturmian_factor(const Word& w) {
  for (int mask = 0; mask < 4; ++mask) {
    for (std::size_t len = 0; len <= w.size(); ++len) {
      for (const Word& u : all_binary(len)) {
        if (balanced(u) && is_factor(w, double_letters(u, mask & 1, mask & 2))) return true;
      }
    }
  }
  return false;
}

inline Word thue_morse(std::size_t iterations) {
  Word w({0});
  for (std::size_t k = 0; k < iterations; ++k) {
    std::vector<Letter> next;
    for (Letter c : w.letters()) {
      next.push_back(c);
      next.push_back(static_cast<Letter>(1 - c));
    }
    w = Word(next);
  }
  return w;
}

// s_{-1} = 1, s_0 = 0, s_{n+1} = s_n^{d_n} s_{n-1}.
inline Word standard(const std::vector<std::size_t>& d, std::size_t steps) {
  Word prev({1});
  Word cur({0});
  for (std::size_t n = 0; n < steps; ++n) {
    Word next;
    for (std::size_t r = 0; r < d[n % d.size()]; ++r) next = next + cur;
    next = next + prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

// Random binary word with a fixed-seed engine owned by the caller.
inline Word random_binary(std::mt19937_64& rng, std::size_t len) {
  std::uniform_int_distribution<std::uint64_t> bit(0, 1);
  std::vector<Letter> v(len);
  for (auto& c : v) c = static_cast<Letter>(bit(rng));
  return Word(v);
}

}  // namespace oracle
