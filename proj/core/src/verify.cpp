#include "palgen/verify.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <ostream>
#include <set>
#include <unordered_set>

#include "palgen/combinatorics.hpp"
#include "palgen/error.hpp"
#include "palgen/parallel.hpp"
#include "palgen/serialize.hpp"
#include "palgen/solver.hpp"
#include "palgen/sturm.hpp"
#include "palgen/witness.hpp"

namespace palgen {

using nlohmann::json;

std::uint64_t VerificationReport::cases_checked() const {
  std::uint64_t total = 0;
  for (const auto& line : lines) total += line.checked;
  return total;
}

std::vector<FailureRecord> VerificationReport::failures() const {
  std::vector<FailureRecord> out;
  for (const auto& line : lines) out.insert(out.end(), line.failures.begin(), line.failures.end());
  return out;
}

bool VerificationReport::passed() const {
  return std::all_of(lines.begin(), lines.end(), [](const auto& l) { return l.failures.empty(); });
}

json line_json(const VerificationReport& report, const CaseSummary& line) {
  json j = {{"campaign", report.campaign}, {"length", line.length}, {"checked", line.checked}};
  json failures = json::array();
  for (const auto& f : line.failures) {
    failures.push_back(
        {{"word", f.word}, {"expected", f.expected}, {"actual", f.actual}, {"replay", f.replay}});
  }
  j["failures"] = std::move(failures);
  for (const auto& [key, value] : line.details.items()) j[key] = value;
  return j;
}

json verdict_json(const VerificationReport& report) {
  json j = {{"campaign", report.campaign},
            {"verdict", report.passed() ? "pass" : "fail"},
            {"checked", report.cases_checked()},
            {"failures", report.failures().size()},
            {"parameters", report.parameters},
            {"elapsed_ms", report.elapsed.count()}};
  for (const auto& [key, value] : report.summary.items()) j[key] = value;
  return j;
}

void write_jsonl(const VerificationReport& report, std::ostream& out) {
  for (const auto& line : report.lines) out << line_json(report, line).dump() << '\n';
  out << verdict_json(report).dump() << '\n';
}

namespace {

using Clock = std::chrono::steady_clock;

void check_guard(const char* what, std::size_t value, std::size_t limit,
                 const CampaignOptions& options) {
  if (!options.ignore_guards && value > limit) {
    throw ResourceError(std::string(what) + " = " + std::to_string(value) +
                        " exceeds the resource guard " + std::to_string(limit));
  }
}

std::string mu_text(const MuResult& r) {
  switch (r.outcome) {
    case MuResult::Outcome::Exact:
      return "mu=" + std::to_string(r.value);
    case MuResult::Outcome::AboveCap:
      return "mu>" + std::to_string(r.cap);
    case MuResult::Outcome::Infinite:
      return "mu=inf";
  }
  return "?";
}

std::string replay_mu(const Word& w, std::optional<std::size_t> cap = std::nullopt) {
  std::string cmd = "palgen mu " + w.str();
  if (cap) cmd += " --cap " + std::to_string(*cap);
  return cmd;
}

// Worker-local accumulator; merged in an order-independent way.
struct Tally {
  std::uint64_t checked = 0;
  std::vector<FailureRecord> failures;
  std::array<std::uint64_t, 4> counters{};

  void fail(const Word& w, std::string expected, std::string actual, std::string replay) {
    failures.push_back({w.str(), std::move(expected), std::move(actual), std::move(replay)});
  }
};

// Runs `check(word, tally)` over `count` items produced by `make(index)`,
// returning the merged tally with failures sorted.
template <typename Make, typename Check>
Tally sweep(std::size_t count, unsigned threads, Make make, Check check) {
  std::vector<Tally> per_worker(std::max(1u, threads));
  parallel_for(count, threads, [&](std::size_t k, unsigned worker) {
    check(make(k), per_worker[worker]);
  });
  Tally total;
  for (auto& t : per_worker) {
    total.checked += t.checked;
    for (std::size_t c = 0; c < t.counters.size(); ++c) total.counters[c] += t.counters[c];
    total.failures.insert(total.failures.end(), std::make_move_iterator(t.failures.begin()),
                          std::make_move_iterator(t.failures.end()));
  }
  std::sort(total.failures.begin(), total.failures.end());
  return total;
}

template <typename Check>
Tally sweep_binary(std::size_t len, unsigned threads, Check check) {
  return sweep(
      binary_word_count(len), threads,
      [len](std::size_t bits) {
        return PackedBinary{bits, static_cast<std::uint8_t>(len)}.to_word();
      },
      check);
}

Word palindrome_from_half(std::uint64_t half_bits, std::size_t len) {
  const std::size_t half = (len + 1) / 2;
  std::vector<Letter> letters(len);
  for (std::size_t k = 0; k < half; ++k) {
    const auto bit = static_cast<Letter>((half_bits >> (half - 1 - k)) & 1U);
    letters[k] = bit;
    letters[len - 1 - k] = bit;
  }
  return Word(std::move(letters));
}

template <typename Check>
Tally sweep_palindromes(std::size_t len, unsigned threads, Check check) {
  return sweep(
      binary_word_count((len + 1) / 2), threads,
      [len](std::size_t half) { return palindrome_from_half(half, len); }, check);
}

CaseSummary to_line(std::size_t length, Tally&& t, json details = json::object()) {
  CaseSummary line;
  line.length = length;
  line.checked = t.checked;
  line.failures = std::move(t.failures);
  line.details = std::move(details);
  return line;
}

struct Stopwatch {
  Clock::time_point start = Clock::now();
  std::chrono::milliseconds elapsed() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start);
  }
};

bool is_letter_power(const Word& w) {
  const auto s = w.letters();
  return std::adjacent_find(s.begin(), s.end(), std::not_equal_to<>()) == s.end();
}

}  // namespace

VerificationReport verify_theorem_main(std::size_t max_len, const CampaignOptions& options) {
  check_guard("max_len", max_len, guards::kTheoremMaxLen, options);
  Stopwatch clock;
  VerificationReport report;
  report.campaign = "theorem_main";
  report.parameters = {{"max_len", max_len}, {"mu_cap", 3}};
  std::uint64_t above = 0;
  for (std::size_t len = 1; len <= max_len; ++len) {
    Tally t = sweep_binary(len, options.threads, [](const Word& w, Tally& tally) {
      ++tally.checked;
      const MuResult r = mu(w, 3);
      const bool small = r.at_most(3);
      const bool sturmian = is_double_sturmian_factor(w);
      tally.counters[0] += small;
      tally.counters[1] += sturmian;
      if (small != sturmian) {
        tally.fail(w, std::string("double_sturmian_factor=") + (sturmian ? "true" : "false"),
                   mu_text(r), replay_mu(w, 3) + " ; palgen classify " + w.str());
      }
    });
    above += t.checked - t.counters[0];
    json details = {{"mu_le_3", t.counters[0]}, {"double_sturmian_factor", t.counters[1]}};
    report.lines.push_back(to_line(len, std::move(t), std::move(details)));
  }
  report.summary = {{"mu_gt_3", above}};
  report.elapsed = clock.elapsed();
  return report;
}

VerificationReport verify_heritage(std::size_t max_len, const CampaignOptions& options) {
  check_guard("max_len", max_len, guards::kHeritageMaxLen, options);
  Stopwatch clock;
  VerificationReport report;
  report.campaign = "heritage";
  report.parameters = {{"max_len", max_len}};

  // Exact mu of every binary word up to max_len, indexed by (length, bits).
  std::vector<std::vector<std::uint16_t>> table(max_len + 1);
  for (std::size_t len = 1; len <= max_len; ++len) {
    table[len].resize(binary_word_count(len));
    parallel_for(table[len].size(), options.threads, [&](std::size_t bits, unsigned) {
      const Word w = PackedBinary{bits, static_cast<std::uint8_t>(len)}.to_word();
      table[len][bits] = static_cast<std::uint16_t>(mu(w).value);
    });
  }

  for (std::size_t len = 1; len <= max_len; ++len) {
    Tally t = sweep(
        binary_word_count(len), options.threads, [](std::size_t bits) { return bits; },
        [&](std::uint64_t bits, Tally& tally) {
          ++tally.checked;
          const std::uint16_t whole = table[len][bits];
          for (std::size_t i = 1; i <= len; ++i) {
            for (std::size_t j = i; j <= len; ++j) {
              if (i == 1 && j == len) continue;
              const std::size_t flen = j - i + 1;
              const std::uint64_t fbits = (bits >> (len - j)) & ((std::uint64_t{1} << flen) - 1);
              ++tally.counters[0];
              const std::uint16_t part = table[flen][fbits];
              if (part > whole) {
                const Word w = PackedBinary{bits, static_cast<std::uint8_t>(len)}.to_word();
                const Word v = w.factor({i, j});
                tally.fail(w,
                           "mu(" + v.str() + ") <= mu(" + w.str() + ")=" + std::to_string(whole),
                           "mu(" + v.str() + ")=" + std::to_string(part),
                           replay_mu(w) + " ; " + replay_mu(v));
              }
            }
          }
        });
    json details = {{"factor_pairs", t.counters[0]}};
    report.lines.push_back(to_line(len, std::move(t), std::move(details)));
  }
  report.elapsed = clock.elapsed();
  return report;
}

VerificationReport verify_doubling(std::size_t max_len, const CampaignOptions& options) {
  check_guard("max_len", max_len, guards::kDoublingMaxLen, options);
  Stopwatch clock;
  VerificationReport report;
  report.campaign = "doubling";
  report.parameters = {{"max_len", max_len}};
  for (std::size_t len = 1; len <= max_len; ++len) {
    Tally t = sweep_binary(len, options.threads, [](const Word& w, Tally& tally) {
      const MuResult base = mu(w);
      for (Letter a : {Letter{0}, Letter{1}}) {
        ++tally.checked;
        const std::string tag = "d_" + std::string(1, display_char(a));
        const Word doubled = double_letter(w, a);
        const MuResult image = mu(doubled, base.value + 1);
        if (!image.at_most(base.value + 1)) {
          tally.fail(w, tag + ": mu <= " + std::to_string(base.value + 1),
                     tag + "(" + w.str() + ")=" + doubled.str() + " " + mu_text(image),
                     replay_mu(w) + " ; " + replay_mu(doubled));
        }
        if (image.is_exact() && image.value == base.value + 1) ++tally.counters[0];

        const Dilation d = dilate(base.witness, w, a);
        const bool centered = has_centered_odd_generator(base.witness, w, a);
        const std::size_t allowed = centered ? base.value : base.value + 1;
        const std::string replay = "palgen witness --construction dilate " + w.str() +
                                   " --letter " + std::string(1, display_char(a));
        if (d.word != doubled || !generates(d.set, d.word)) {
          tally.fail(w, tag + ": dilated witness generates " + doubled.str(),
                     "dilated set does not generate", replay);
        } else if (d.set.size() > allowed || (w.count(a) > 0 && centered && d.set.size() != base.value)) {
          tally.fail(w, tag + ": dilated witness size <= " + std::to_string(allowed),
                     "size " + std::to_string(d.set.size()), replay);
        }
        if (centered) ++tally.counters[1];
      }
    });
    json details = {{"tight", t.counters[0]}, {"centered_witnesses", t.counters[1]}};
    report.lines.push_back(to_line(len, std::move(t), std::move(details)));
  }
  report.elapsed = clock.elapsed();
  return report;
}

VerificationReport tm_growth(std::size_t max_k, std::optional<std::size_t> mu_cap,
                             const CampaignOptions& options) {
  check_guard("2*max_k", 2 * max_k,
              mu_cap ? guards::kTmCappedMaxDoubleK : guards::kTmExactMaxDoubleK, options);
  Stopwatch clock;
  VerificationReport report;
  report.campaign = "tm_growth";
  report.parameters = {{"max_k", max_k}};
  report.parameters["mu_cap"] = mu_cap ? json(*mu_cap) : json(nullptr);

  std::vector<MuResult> results(max_k);
  std::vector<Word> words(max_k);
  for (std::size_t k = 1; k <= max_k; ++k) words[k - 1] = tau_iterate(2 * k);
  parallel_for(max_k, options.threads,
               [&](std::size_t k, unsigned) { results[k] = mu(words[k], mu_cap); });

  json sequence = json::array();
  for (std::size_t k = 1; k <= max_k; ++k) {
    CaseSummary line;
    line.length = words[k - 1].size();
    line.checked = 1;
    line.details = {{"k", 2 * k}, {"mu", results[k - 1]}};
    sequence.push_back(results[k - 1]);
    if (k >= 2) {
      const MuResult& prev = results[k - 2];
      const MuResult& cur = results[k - 1];
      const std::string expected =
          "mu(t_" + std::to_string(2 * k) + ") > mu(t_" + std::to_string(2 * k - 2) + ")";
      const std::string actual = mu_text(cur) + " vs " + mu_text(prev);
      bool violated = false;
      if (prev.is_exact() && cur.is_exact()) violated = cur.value <= prev.value;
      // mu(t_2k) > cap >= mu(t_2k-2) is consistent; an exact value below an
      // earlier above-cap result would contradict monotonicity.
      if (prev.is_above_cap() && cur.is_exact()) violated = true;
      if (cur.is_infinite() || prev.is_infinite()) violated = true;
      if (violated) {
        line.failures.push_back({words[k - 1].str(), expected, actual,
                                 replay_mu(words[k - 1], mu_cap)});
      }
    }
    report.lines.push_back(std::move(line));
  }
  report.summary = {{"sequence", sequence}};
  report.elapsed = clock.elapsed();
  return report;
}

namespace {

Word repeat(Letter letter, std::size_t count) { return single_letter_power(letter, count); }

Word wrap(Letter outer, const Word& inner) {
  const Word o = repeat(outer, 1);
  return o + inner + o;
}

// First forbidden pattern found in w, or nothing. The patterns are the
// structural consequences of mu(w) <= 3 on binary words.
std::optional<std::string> pattern_violation(const Word& w) {
  const std::size_t n = w.size();
  // Common a·u·a / b·u·b palindromes must be even letter powers.
  std::set<std::vector<Letter>> inner0;
  std::set<std::vector<Letter>> inner1;
  for (const auto& iv : palindromic_intervals(w, false)) {
    if (iv.length() < 2) continue;
    const Letter outer = w.at(iv.i);
    const Word u = iv.length() == 2 ? Word() : w.factor({iv.i + 1, iv.j - 1});
    (outer == 0 ? inner0 : inner1).emplace(u.letters().begin(), u.letters().end());
  }
  for (const auto& u : inner0) {
    if (!inner1.contains(u)) continue;
    const Word uw(u);
    if (!(is_letter_power(uw) && uw.size() % 2 == 0)) {
      return "0u0 and 1u1 occur with u=" + uw.str() + " (not an even letter power)";
    }
  }

  if (contains_factor(w, repeat(0, 3)) && contains_factor(w, repeat(1, 3))) {
    return std::string("000 and 111 both occur");
  }
  for (Letter a : {Letter{0}, Letter{1}}) {
    const Letter b = static_cast<Letter>(1 - a);
    const std::string as(1, display_char(a));
    const std::string bs(1, display_char(b));
    for (std::size_t k = 1; k + 2 <= n; ++k) {
      const Word bakb = wrap(b, repeat(a, k));
      const bool has_bakb = contains_factor(w, bakb);
      if (!has_bakb) continue;
      if (k % 2 == 1 && contains_factor(w, repeat(a, k + 2))) {
        return bakb.str() + " and " + as + "^" + std::to_string(k + 2) + " both occur (k odd)";
      }
      if (contains_factor(w, repeat(a, k + 3))) {
        return bakb.str() + " and " + as + "^" + std::to_string(k + 3) + " both occur";
      }
      if (contains_factor(w, repeat(a, k + 2)) && contains_factor(w, wrap(b, repeat(a, k + 1)))) {
        return as + "^" + std::to_string(k + 2) + ", " + wrap(b, repeat(a, k + 1)).str() + " and " +
               bakb.str() + " all occur";
      }
    }
  }
  return std::nullopt;
}

}  // namespace

VerificationReport verify_pattern_lemmas(std::size_t max_len, const CampaignOptions& options) {
  check_guard("max_len", max_len, guards::kPatternMaxLen, options);
  Stopwatch clock;
  VerificationReport report;
  report.campaign = "pattern_lemmas";
  report.parameters = {{"max_len", max_len}, {"mu_cap", 3}};
  for (std::size_t len = 1; len <= max_len; ++len) {
    Tally t = sweep_binary(len, options.threads, [](const Word& w, Tally& tally) {
      if (!mu(w, 3).at_most(3)) return;
      ++tally.checked;
      if (auto why = pattern_violation(w)) {
        tally.fail(w, "no forbidden pattern when mu <= 3", *why, replay_mu(w, 3));
      }
    });
    report.lines.push_back(to_line(len, std::move(t)));
  }
  report.elapsed = clock.elapsed();
  return report;
}

VerificationReport verify_unbordered_structure(const Source& source, std::size_t len,
                                               const CampaignOptions& options) {
  check_guard("len", len, guards::kUnborderedLen, options);
  Stopwatch clock;
  VerificationReport report;
  report.campaign = "unbordered_structure";
  report.parameters = {{"source", source.str()}, {"len", len}};

  const Word prefix = source.prefix(len);
  const bool sturmian = source.kind == Source::Kind::Standard;

  // Distinct factors by length, in order of first occurrence.
  std::vector<std::vector<Word>> by_length(len + 1);
  for (std::size_t flen = 1; flen <= len; ++flen) {
    std::unordered_set<Word> seen;
    for (std::size_t s = 1; s + flen - 1 <= len; ++s) {
      Word v = prefix.factor({s, s + flen - 1});
      if (seen.insert(v).second) by_length[flen].push_back(std::move(v));
    }
  }

  CaseSummary line;
  line.length = len;
  std::uint64_t unbordered = 0;
  std::size_t longest_unbordered = 0;
  std::set<std::size_t> lyndon_lengths;
  const LetterOrder zero_first = natural_order();
  const LetterOrder one_first = order_with_first(1);
  for (std::size_t flen = 1; flen <= len; ++flen) {
    for (const Word& v : by_length[flen]) {
      ++line.checked;
      if (is_lyndon(v, zero_first) || is_lyndon(v, one_first)) lyndon_lengths.insert(flen);
      if (!is_unbordered(v)) continue;
      ++unbordered;
      longest_unbordered = std::max(longest_unbordered, flen);
      if (!sturmian || flen < 2) continue;
      const bool shape = v.at(1) != v.at(flen) && v.is_binary() &&
                         is_central(v.factor({1, flen}).size() == 2 ? Word() : v.factor({2, flen - 1}))
                             .has_value();
      if (!shape) {
        line.failures.push_back({v.str(), "unbordered factor is a·(central)·b", "shape differs",
                                 "palgen classify " + v.str()});
      }
    }
  }

  // At least three distinct Lyndon lengths within the prefix.
  if (lyndon_lengths.size() < 3) {
    line.failures.push_back({prefix.str(), "Lyndon factors of >= 3 distinct lengths",
                             std::to_string(lyndon_lengths.size()) + " distinct lengths",
                             "palgen gen " + source.str() + " --len " + std::to_string(len)});
  }

  // Shortest factor (then lexicographically least) with mu >= 3.
  std::optional<Word> rich;
  std::optional<MuResult> rich_mu;
  for (std::size_t flen = 1; flen <= len && !rich; ++flen) {
    std::vector<Word> sorted = by_length[flen];
    std::sort(sorted.begin(), sorted.end());
    std::vector<MuResult> results(sorted.size());
    parallel_for(sorted.size(), options.threads,
                 [&](std::size_t k, unsigned) { results[k] = mu(sorted[k], 2); });
    for (std::size_t k = 0; k < sorted.size(); ++k) {
      if (!results[k].at_most(2)) {
        rich = sorted[k];
        rich_mu = results[k];
        break;
      }
    }
  }
  if (!rich) {
    line.failures.push_back({prefix.str(), "some factor with mu >= 3", "none found",
                             "palgen psi --source " + source.str() + " --len " +
                                 std::to_string(len) + " --factor-cap 16 --cap 3"});
  }

  line.details = {{"unbordered_factors", unbordered},
                  {"longest_unbordered", longest_unbordered},
                  {"lyndon_lengths", std::vector<std::size_t>(lyndon_lengths.begin(), lyndon_lengths.end())},
                  {"mu_ge_3_factor", rich ? json(rich->str()) : json(nullptr)},
                  {"mu_ge_3_result", rich_mu ? json(*rich_mu) : json(nullptr)},
                  {"sturmian_shape_checked", sturmian}};
  report.lines.push_back(std::move(line));
  report.elapsed = clock.elapsed();
  return report;
}

VerificationReport verify_su(std::size_t max_len, const CampaignOptions& options) {
  check_guard("max_len", max_len, guards::kSuMaxLen, options);
  Stopwatch clock;
  VerificationReport report;
  report.campaign = "su";
  report.parameters = {{"max_len", max_len}};
  for (std::size_t len = 1; len <= max_len; ++len) {
    Tally t = sweep_binary(len, options.threads, [](const Word& w, Tally& tally) {
      ++tally.checked;
      const GeneratorSet set = witness_su(w);
      tally.counters[0] += set.size();
      if (!generates(set, w)) {
        tally.fail(w, "S_u generates", "S_u does not generate",
                   "palgen witness --construction su " + w.str());
      }
    });
    json details = {{"total_generators", t.counters[0]}};
    report.lines.push_back(to_line(len, std::move(t), std::move(details)));
  }
  report.elapsed = clock.elapsed();
  return report;
}

VerificationReport verify_three(std::size_t max_central, std::size_t solver_check,
                                const CampaignOptions& options) {
  check_guard("max_central", max_central, guards::kThreeMaxCentral, options);
  check_guard("solver_check", solver_check, guards::kThreeSolverCheck, options);
  Stopwatch clock;
  VerificationReport report;
  report.campaign = "three";
  report.parameters = {{"max_central", max_central}, {"solver_check", solver_check}};
  for (std::size_t len = 1; len <= max_central; ++len) {
    Tally t = sweep_palindromes(len, options.threads, [&](const Word& x, Tally& tally) {
      if (is_letter_power(x) || !is_central(x)) return;
      ++tally.checked;
      const Word zero = repeat(0, 1);
      const Word one = repeat(1, 1);
      for (const Word& w : {zero + x + one, one + x + zero}) {
        const auto set = witness_three(w);
        const std::string replay = "palgen witness --construction three " + w.str();
        if (!set || set->size() != 3 || !generates(*set, w)) {
          tally.fail(w, "three-generator set generates", set ? "does not generate" : "no set", replay);
          continue;
        }
        if (len <= solver_check) {
          ++tally.counters[0];
          const MuResult r = mu(w, 3);
          if (!r.at_most(3)) tally.fail(w, "mu <= 3", mu_text(r), replay_mu(w, 3));
        }
      }
    });
    json details = {{"central_words", t.checked}, {"solver_checked", t.counters[0]}};
    report.lines.push_back(to_line(len, std::move(t), std::move(details)));
  }
  report.elapsed = clock.elapsed();
  return report;
}

VerificationReport verify_leaves(std::size_t max_len, const CampaignOptions& options) {
  check_guard("max_len", max_len, guards::kLeavesMaxLen, options);
  Stopwatch clock;
  VerificationReport report;
  report.campaign = "leaves";
  report.parameters = {{"max_len", max_len}, {"max_set_size", 3}};
  for (std::size_t len = 1; len <= max_len; ++len) {
    Tally t = sweep_binary(len, options.threads, [](const Word& w, Tally& tally) {
      if (w.count(0) < 2 || w.count(1) < 2 || !is_unbordered(w)) return;
      ++tally.checked;
      for (const GeneratorSet& set : generating_sets(w, 3)) {
        ++tally.counters[0];
        std::array<std::size_t, 2> per_label{};
        for (const Leaf& leaf : leaves(set, w)) ++per_label[leaf.label];
        if (per_label[0] > 2 || per_label[1] > 2) {
          tally.fail(w, "at most two leaves per label",
                     json(set).dump() + " has " + std::to_string(per_label[0]) + "/" +
                         std::to_string(per_label[1]) + " leaves",
                     "palgen generates " + w.str() + " --set '" + json(set).dump() + "'");
        }
      }
    });
    json details = {{"generating_sets", t.counters[0]}};
    report.lines.push_back(to_line(len, std::move(t), std::move(details)));
  }
  report.elapsed = clock.elapsed();
  return report;
}

namespace {

bool coprime_period_pair_exists(const Word& w) {
  // p + q - 2 = |w| with p, q >= 1 coprime periods (a period >= |w| is
  // vacuous).
  const std::size_t n = w.size();
  for (std::size_t p = 1; p <= n + 1; ++p) {
    const std::size_t q = n + 2 - p;
    if (q < 1 || std::gcd(p, q) != 1) continue;
    if (has_period(w, p) && has_period(w, q)) return true;
  }
  return false;
}

char center_letter(const Word& w) { return display_char(w.at((w.size() + 1) / 2)); }

}  // namespace

VerificationReport verify_central(std::size_t max_len, std::size_t max_central,
                                  const CampaignOptions& options) {
  check_guard("max_len", max_len, guards::kCentralMaxLen, options);
  check_guard("max_central", max_central, guards::kLongestPalindromeMaxCentral, options);
  Stopwatch clock;
  VerificationReport report;
  report.campaign = "central";
  report.parameters = {{"max_len", max_len}, {"max_central", max_central}};

  const Word zero = repeat(0, 1);
  const Word one = repeat(1, 1);
  std::uint64_t total_central = 0;
  for (std::size_t len = 0; len <= max_len; ++len) {
    Tally t = sweep_binary(len, options.threads, [&](const Word& w, Tally& tally) {
      ++tally.checked;
      const auto cert = is_central(w);
      const bool direct = is_palindrome(w) && is_balanced(w + zero) && is_balanced(w + one);
      const std::string replay = "palgen classify " + w.str();
      if (cert.has_value() != direct) {
        tally.fail(w, std::string("palindrome with w0, w1 balanced = ") + (direct ? "true" : "false"),
                   std::string("certificate = ") + (cert ? "yes" : "no"), replay);
      }
      if (cert.has_value() != coprime_period_pair_exists(w)) {
        tally.fail(w, "central iff coprime periods p, q with |w| = p + q - 2",
                   std::string("certificate = ") + (cert ? "yes" : "no"), replay);
      }
      if (!cert) return;
      ++tally.counters[0];
      if (cert->kind != CentralCertificate::Kind::Composite) return;
      const auto ps = periods(w);
      const auto has = [&](std::size_t p) { return std::binary_search(ps.begin(), ps.end(), p); };
      if (!has(cert->p) || !has(cert->q) || std::gcd(cert->p, cert->q) != 1 ||
          w.size() + 2 != cert->p + cert->q || ps.front() != std::min(cert->p, cert->q)) {
        tally.fail(w, "p, q coprime periods, min(p,q) least period",
                   "p=" + std::to_string(cert->p) + " q=" + std::to_string(cert->q), replay);
      }
      for (const auto& other : central_decompositions(w)) {
        if (std::minmax(other.p, other.q) != std::minmax(cert->p, cert->q)) {
          tally.fail(w, "every decomposition gives the same {p,q}",
                     "found p=" + std::to_string(other.p) + " q=" + std::to_string(other.q), replay);
        }
      }
      if (central_decompositions(w).size() > 1) ++tally.counters[1];
    });
    total_central += t.counters[0];
    json details = {{"central", t.counters[0]}, {"multiple_decompositions", t.counters[1]}};
    report.lines.push_back(to_line(len, std::move(t), std::move(details)));
  }

  // Longest palindromic prefix and suffix of 0·x·1.
  std::uint64_t composite = 0;
  CaseSummary prop;
  prop.length = max_central;
  prop.details = {{"check", "longest_palindromic_prefix_suffix"}};
  for (std::size_t len = 1; len <= max_central; ++len) {
    Tally t = sweep_palindromes(len, options.threads, [&](const Word& x, Tally& tally) {
      if (is_letter_power(x)) return;
      const auto cert = is_central(x);
      if (!cert) return;
      ++tally.checked;
      const Word w = zero + x + one;
      const Interval want_prefix{1, cert->u.size() + 2};
      const Interval want_suffix{x.size() - cert->v.size() + 1, x.size() + 2};
      const std::string replay = "palgen classify " + w.str();
      const Interval got_prefix = longest_palindromic_prefix(w);
      const Interval got_suffix = longest_palindromic_suffix(w);
      if (got_prefix != want_prefix || got_suffix != want_suffix) {
        tally.fail(w, "prefix " + to_string(want_prefix) + " suffix " + to_string(want_suffix),
                   "prefix " + to_string(got_prefix) + " suffix " + to_string(got_suffix), replay);
      }
      // Exactly two of x, 0u0, 1v1 have odd length, with distinct centers.
      std::vector<char> centers;
      for (const Word& p : {x, wrap(0, cert->u), wrap(1, cert->v)}) {
        if (p.size() % 2 == 1) centers.push_back(center_letter(p));
      }
      if (centers.size() != 2 || centers[0] == centers[1]) {
        tally.fail(w, "two odd palindromes among x, 0u0, 1v1 with distinct centers",
                   std::to_string(centers.size()) + " odd", replay);
      }
    });
    composite += t.checked;
    prop.checked += t.checked;
    prop.failures.insert(prop.failures.end(), t.failures.begin(), t.failures.end());
  }
  prop.details["central_non_power"] = composite;
  report.lines.push_back(std::move(prop));
  report.summary = {{"central_words", total_central}};
  report.elapsed = clock.elapsed();
  return report;
}

}  // namespace palgen
