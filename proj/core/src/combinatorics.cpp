#include "palgen/combinatorics.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

#include "palgen/error.hpp"

namespace palgen {

namespace {

void require_nonempty(const Word& w, const char* what) {
  if (w.empty()) throw UndefinedInputError(std::string(what) + " is undefined for the empty word");
}

void require_binary(const Word& w, const char* what) {
  if (!w.is_binary()) throw DomainError(std::string(what) + " requires a binary word, got \"" + w.str() + "\"");
}

bool is_palindrome_span(std::span<const Letter> s) {
  for (std::size_t a = 0, b = s.size(); a + 1 < b; ++a, --b) {
    if (s[a] != s[b - 1]) return false;
  }
  return true;
}

// Count of ones in each window of `len` letters; returns (min, max).
std::pair<std::size_t, std::size_t> window_count_range(std::span<const Letter> s, std::size_t len) {
  std::size_t ones = 0;
  for (std::size_t k = 0; k < len; ++k) ones += s[k];
  std::size_t lo = ones, hi = ones;
  for (std::size_t k = len; k < s.size(); ++k) {
    ones = ones + s[k] - s[k - len];
    lo = std::min(lo, ones);
    hi = std::max(hi, ones);
  }
  return {lo, hi};
}

// Shortest u (then lexicographically least) with 0u0 and 1u1 both factors,
// restricted to |u| == inner_len.
std::optional<Word> common_inner_palindrome(const Word& w, std::size_t inner_len) {
  const auto s = w.letters();
  const std::size_t len = inner_len + 2;
  if (len > s.size()) return std::nullopt;
  std::set<std::vector<Letter>> with_zero;
  std::set<std::vector<Letter>> with_one;
  for (std::size_t start = 0; start + len <= s.size(); ++start) {
    if (s[start] != s[start + len - 1]) continue;
    auto inner = s.subspan(start + 1, inner_len);
    if (!is_palindrome_span(inner)) continue;
    (s[start] == 0 ? with_zero : with_one).emplace(inner.begin(), inner.end());
  }
  for (const auto& u : with_zero) {
    if (with_one.contains(u)) return Word(u);
  }
  return std::nullopt;
}

std::optional<CentralCertificate> verify_composite(const Word& w, Word u, Word v) {
  static const Word zero_one = parse_word("01");
  static const Word one_zero = parse_word("10");
  if (u + zero_one + v != w || v + one_zero + u != w) return std::nullopt;
  CentralCertificate cert;
  cert.kind = CentralCertificate::Kind::Composite;
  cert.p = u.size() + 2;
  cert.q = v.size() + 2;
  cert.u = std::move(u);
  cert.v = std::move(v);
  if (std::gcd(cert.p, cert.q) != 1 || !has_period(w, cert.p) || !has_period(w, cert.q) ||
      w.size() + 2 != cert.p + cert.q || !is_palindrome(w)) {
    throw std::logic_error("central decomposition of \"" + w.str() +
                           "\" failed certificate verification");
  }
  return cert;
}

}  // namespace

bool is_palindrome(const Word& w) { return is_palindrome_span(w.letters()); }

std::vector<Interval> palindromic_intervals(const Word& w, bool include_trivial) {
  const auto s = w.letters();
  const std::size_t n = s.size();
  std::vector<Interval> out;
  // Centers at 2c (odd length, on letter c) and 2c+1 (even, between c and c+1).
  for (std::size_t center = 0; center + 1 < 2 * n; ++center) {
    std::size_t lo = center / 2;
    std::size_t hi = lo + center % 2;
    while (hi < n && s[lo] == s[hi]) {
      if (lo != hi || include_trivial) out.emplace_back(lo + 1, hi + 1);
      if (lo == 0) break;
      --lo;
      ++hi;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_unbordered(const Word& w) {
  require_nonempty(w, "is_unbordered");
  // Prefix function: the longest border of the whole word is pi[n-1].
  const auto s = w.letters();
  std::vector<std::size_t> pi(s.size(), 0);
  for (std::size_t k = 1; k < s.size(); ++k) {
    std::size_t b = pi[k - 1];
    while (b > 0 && s[k] != s[b]) b = pi[b - 1];
    if (s[k] == s[b]) ++b;
    pi[k] = b;
  }
  return pi.back() == 0;
}

LetterOrder natural_order() {
  LetterOrder order{};
  std::iota(order.begin(), order.end(), std::uint8_t{0});
  return order;
}

LetterOrder order_with_first(Letter first) {
  LetterOrder order = natural_order();
  for (std::size_t c = 0; c < order.size(); ++c) {
    if (c < first) order[c] = static_cast<std::uint8_t>(c + 1);
  }
  order[first] = 0;
  return order;
}

bool is_lyndon(const Word& w, const LetterOrder& order) {
  require_nonempty(w, "is_lyndon");
  const auto s = w.letters();
  const std::size_t n = s.size();
  for (std::size_t shift = 1; shift < n; ++shift) {
    // Compare w against its rotation starting at `shift`.
    int cmp = 0;
    for (std::size_t k = 0; k < n && cmp == 0; ++k) {
      const auto lhs = order[s[k]];
      const auto rhs = order[s[(k + shift) % n]];
      if (lhs != rhs) cmp = lhs < rhs ? -1 : 1;
    }
    if (cmp >= 0) return false;
  }
  return true;
}

bool has_period(const Word& w, std::size_t p) {
  if (p == 0) return false;
  const auto s = w.letters();
  for (std::size_t k = 0; k + p < s.size(); ++k) {
    if (s[k] != s[k + p]) return false;
  }
  return true;
}

std::vector<std::size_t> periods(const Word& w) {
  require_nonempty(w, "periods");
  std::vector<std::size_t> out;
  for (std::size_t p = 1; p <= w.size(); ++p) {
    if (has_period(w, p)) out.push_back(p);
  }
  return out;
}

bool is_balanced(const Word& w) {
  require_binary(w, "is_balanced");
  const auto s = w.letters();
  for (std::size_t len = 1; len < s.size(); ++len) {
    const auto [lo, hi] = window_count_range(s, len);
    if (hi - lo > 1) return false;
  }
  return true;
}

std::optional<UnbalanceWitness> unbalance_witness(const Word& w) {
  require_binary(w, "unbalance_witness");
  const auto s = w.letters();
  std::size_t failing = 0;
  for (std::size_t len = 2; len < s.size() && failing == 0; ++len) {
    const auto [lo, hi] = window_count_range(s, len);
    if (hi - lo > 1) failing = len;
  }
  if (failing == 0) return std::nullopt;
  // The shortest unbalanced pair has the shape a·u·a / b·u·b, so the failing
  // length class normally holds the witness; scan the others if it does not.
  if (auto u = common_inner_palindrome(w, failing - 2)) {
    return UnbalanceWitness{0, std::move(*u)};
  }
  for (std::size_t inner = 0; inner + 2 <= s.size(); ++inner) {
    if (auto u = common_inner_palindrome(w, inner)) return UnbalanceWitness{0, std::move(*u)};
  }
  throw std::logic_error("unbalanced word \"" + w.str() + "\" has no a·u·a / b·u·b witness");
}

std::vector<CentralCertificate> central_decompositions(const Word& w) {
  require_binary(w, "central_decompositions");
  std::vector<CentralCertificate> out;
  const auto s = w.letters();
  for (std::size_t t = 0; t + 1 < s.size(); ++t) {
    if (s[t] != 0 || s[t + 1] != 1) continue;
    Word u(std::vector<Letter>(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(t)));
    Word v(std::vector<Letter>(s.begin() + static_cast<std::ptrdiff_t>(t + 2), s.end()));
    if (auto cert = verify_composite(w, std::move(u), std::move(v))) out.push_back(std::move(*cert));
  }
  return out;
}

std::optional<CentralCertificate> is_central(const Word& w) {
  require_binary(w, "is_central");
  const auto s = w.letters();
  if (std::adjacent_find(s.begin(), s.end(), std::not_equal_to<>()) == s.end()) {
    CentralCertificate cert;
    cert.kind = CentralCertificate::Kind::LetterPower;
    cert.letter = w.empty() ? Letter{0} : s.front();
    cert.power = w.size();
    return cert;
  }
  if (!is_palindrome(w)) return std::nullopt;
  for (std::size_t t = 0; t + 1 < s.size(); ++t) {
    if (s[t] != 0 || s[t + 1] != 1) continue;
    Word u(std::vector<Letter>(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(t)));
    Word v(std::vector<Letter>(s.begin() + static_cast<std::ptrdiff_t>(t + 2), s.end()));
    if (auto cert = verify_composite(w, std::move(u), std::move(v))) return cert;
  }
  return std::nullopt;
}

Interval longest_palindromic_prefix(const Word& w) {
  require_nonempty(w, "longest_palindromic_prefix");
  const auto s = w.letters();
  for (std::size_t k = s.size(); k > 1; --k) {
    if (is_palindrome_span(s.first(k))) return {1, k};
  }
  return {1, 1};
}

Interval longest_palindromic_suffix(const Word& w) {
  require_nonempty(w, "longest_palindromic_suffix");
  const auto s = w.letters();
  const std::size_t n = s.size();
  for (std::size_t k = 1; k < n; ++k) {
    if (is_palindrome_span(s.subspan(k - 1))) return {k, n};
  }
  return {n, n};
}

std::vector<std::size_t> occurrences(const Word& w, Letter a) {
  std::vector<std::size_t> out;
  const auto s = w.letters();
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (s[k] == a) out.push_back(k + 1);
  }
  return out;
}

bool is_isomorphic(const Word& w, const Word& v) {
  if (w.size() != v.size()) return false;
  // Relabel both words by first occurrence and compare.
  std::array<int, kDisplayAlphabet.size()> w_to_v;
  std::array<int, kDisplayAlphabet.size()> v_to_w;
  w_to_v.fill(-1);
  v_to_w.fill(-1);
  const auto a = w.letters();
  const auto b = v.letters();
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (w_to_v[a[k]] == -1 && v_to_w[b[k]] == -1) {
      w_to_v[a[k]] = b[k];
      v_to_w[b[k]] = a[k];
    } else if (w_to_v[a[k]] != b[k] || v_to_w[b[k]] != a[k]) {
      return false;
    }
  }
  return true;
}

bool contains_factor(const Word& haystack, const Word& needle) {
  const auto h = haystack.letters();
  const auto n = needle.letters();
  return std::search(h.begin(), h.end(), n.begin(), n.end()) != h.end();
}

Word double_letter(const Word& w, Letter a) {
  std::vector<Letter> out;
  out.reserve(w.size() + w.count(a));
  for (Letter l : w.letters()) {
    out.push_back(l);
    if (l == a) out.push_back(l);
  }
  return Word(std::move(out));
}

}  // namespace palgen
