#include "palgen/sturm.hpp"

#include <bit>
#include <charconv>

#include "palgen/combinatorics.hpp"
#include "palgen/error.hpp"

namespace palgen {

namespace {

void require_binary(const Word& w, const char* what) {
  if (!w.is_binary()) throw DomainError(std::string(what) + " requires a binary word, got \"" + w.str() + "\"");
}

}  // namespace

Word thue_morse_prefix(std::size_t len) {
  std::vector<Letter> out(len);
  for (std::size_t k = 0; k < len; ++k) out[k] = static_cast<Letter>(std::popcount(k) & 1);
  return Word(std::move(out));
}

Word tau_iterate(std::size_t k) {
  if (k > kMaxTauIterations) {
    throw ResourceError("tau iteration " + std::to_string(k) + " exceeds the limit of " +
                        std::to_string(kMaxTauIterations));
  }
  std::vector<Letter> cur{0};
  for (std::size_t step = 0; step < k; ++step) {
    std::vector<Letter> next;
    next.reserve(cur.size() * 2);
    for (Letter l : cur) {
      next.push_back(l);
      next.push_back(static_cast<Letter>(1 - l));
    }
    cur = std::move(next);
  }
  return Word(std::move(cur));
}

DirectiveSequence::DirectiveSequence(std::vector<std::size_t> values) : terms(std::move(values)) {
  for (std::size_t t : terms) {
    if (t == 0) throw ContractError("directive terms must be positive");
  }
}

std::string DirectiveSequence::str() const {
  std::string out;
  for (std::size_t k = 0; k < terms.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(terms[k]);
  }
  return out;
}

DirectiveSequence DirectiveSequence::parse(std::string_view text) {
  std::vector<std::size_t> values;
  while (!text.empty()) {
    const auto comma = text.find(',');
    const auto item = text.substr(0, comma);
    std::size_t value = 0;
    const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (ec != std::errc{} || ptr != item.data() + item.size() || value == 0) {
      throw ParseError("bad directive term '" + std::string(item) + "'", values.size() + 1);
    }
    values.push_back(value);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return DirectiveSequence(std::move(values));
}

namespace {

// Runs the standard-word recurrence until `done(current)` holds, reading the
// directive through `term(m)` (1-based m).
template <typename Term, typename Done>
std::vector<Letter> run_standard(Term term, Done done) {
  std::vector<Letter> older{1};
  std::vector<Letter> current{0};
  for (std::size_t m = 1; !done(current); ++m) {
    const std::size_t d = term(m);
    std::vector<Letter> next;
    next.reserve(current.size() * d + older.size());
    for (std::size_t r = 0; r < d; ++r) next.insert(next.end(), current.begin(), current.end());
    next.insert(next.end(), older.begin(), older.end());
    older = std::move(current);
    current = std::move(next);
  }
  return current;
}

}  // namespace

Word standard_word(const DirectiveSequence& d, std::size_t min_len) {
  if (min_len == 0) throw ContractError("standard_word needs min_len >= 1");
  auto letters = run_standard(
      [&](std::size_t m) -> std::size_t {
        if (m > d.terms.size()) {
          throw RangeError("directive (" + d.str() + ") exhausted before reaching length " +
                           std::to_string(min_len));
        }
        return d.terms[m - 1];
      },
      [&](const std::vector<Letter>& cur) { return cur.size() >= min_len; });
  return Word(std::move(letters));
}

Word standard_prefix(const DirectiveSequence& d, std::size_t len) {
  if (len == 0) return Word();
  if (d.terms.empty()) {
    if (len > 1) throw RangeError("an empty directive only yields the seed \"0\"");
    return Word(std::vector<Letter>{0});
  }
  auto letters = run_standard([&](std::size_t m) { return d.terms[(m - 1) % d.terms.size()]; },
                              [&](const std::vector<Letter>& cur) { return cur.size() >= len; });
  letters.resize(len);
  return Word(std::move(letters));
}

std::string DoublingSet::str() const {
  std::string out;
  if (zero) out += '0';
  if (one) out += '1';
  return out;
}

DoublingSet DoublingSet::parse(std::string_view text) {
  DoublingSet out;
  for (std::size_t k = 0; k < text.size(); ++k) {
    if (text[k] == '0') out.zero = true;
    else if (text[k] == '1') out.one = true;
    else throw ParseError("doubling set may only contain 0 and 1", k + 1);
  }
  return out;
}

Word double_word(const Word& w, const DoublingSet& A) {
  require_binary(w, "double");
  std::vector<Letter> out;
  out.reserve(w.size() * 2);
  for (Letter l : w.letters()) {
    out.push_back(l);
    if (A.contains(l)) out.push_back(l);
  }
  return Word(std::move(out));
}

namespace {

struct Block {
  Letter letter;
  std::size_t length;
  bool at_start;
  bool at_end;
};

std::vector<Block> blocks_of(const Word& w) {
  std::vector<Block> out;
  const auto s = w.letters();
  for (std::size_t k = 0; k < s.size();) {
    std::size_t end = k;
    while (end < s.size() && s[end] == s[k]) ++end;
    out.push_back({s[k], end - k, k == 0, end == s.size()});
    k = end;
  }
  return out;
}

}  // namespace

DoublingSet doubling_set(const Word& w) {
  require_binary(w, "doubling_set");
  if (w.empty()) throw UndefinedInputError("doubling_set is undefined for the empty word");
  DoublingSet A{true, true};
  // Interior blocks are exactly the b·a^m·b occurrences.
  for (const auto& b : blocks_of(w)) {
    if (!b.at_start && !b.at_end && b.length % 2 == 1) {
      (b.letter == 0 ? A.zero : A.one) = false;
    }
  }
  return A;
}

LeanResult lean(const Word& w) {
  const DoublingSet A = doubling_set(w);
  std::vector<Letter> out;
  for (const auto& b : blocks_of(w)) {
    std::size_t copies = b.length;
    if (A.contains(b.letter)) {
      // Interior blocks of a doubled letter are even; a boundary block may be
      // half of a doubled letter cut off by the factor window.
      copies = (b.at_start || b.at_end) ? (b.length + 1) / 2 : b.length / 2;
    }
    out.insert(out.end(), copies, b.letter);
  }
  return LeanResult{A, Word(std::move(out))};
}

bool is_double_sturmian_factor(const Word& w) { return is_balanced(lean(w).lean); }

}  // namespace palgen
