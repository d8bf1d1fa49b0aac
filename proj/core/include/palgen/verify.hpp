#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include <nlohmann/json.hpp>

#include "palgen/source.hpp"
#include "palgen/word.hpp"

namespace palgen {

// One counterexample. `replay` is a command line for the CLI that reproduces
// the disagreement on this single word.
struct FailureRecord {
  std::string word;
  std::string expected;
  std::string actual;
  std::string replay;

  friend bool operator<(const FailureRecord& a, const FailureRecord& b) {
    return std::tie(a.word, a.expected, a.actual) < std::tie(b.word, b.expected, b.actual);
  }
};

// One JSONL line of a campaign: everything checked at a single length (or a
// single step, for campaigns that are not organised by length).
struct CaseSummary {
  std::size_t length = 0;
  std::uint64_t checked = 0;
  std::vector<FailureRecord> failures;
  nlohmann::json details = nlohmann::json::object();
};

struct VerificationReport {
  std::string campaign;
  nlohmann::json parameters = nlohmann::json::object();
  std::vector<CaseSummary> lines;
  nlohmann::json summary = nlohmann::json::object();
  std::chrono::milliseconds elapsed{0};

  std::uint64_t cases_checked() const;
  std::vector<FailureRecord> failures() const;
  bool passed() const;
};

// Streams one JSON object per CaseSummary, then the verdict object.
void write_jsonl(const VerificationReport& report, std::ostream& out);
nlohmann::json line_json(const VerificationReport& report, const CaseSummary& line);
nlohmann::json verdict_json(const VerificationReport& report);

struct CampaignOptions {
  unsigned threads = 1;
  // Lift the length guards. Runs can then take a very long time.
  bool ignore_guards = false;
};

// Default lengths used when the caller does not pick one.
namespace defaults {
inline constexpr std::size_t kTheoremMaxLen = 12;
inline constexpr std::size_t kHeritageMaxLen = 8;
inline constexpr std::size_t kDoublingMaxLen = 8;
inline constexpr std::size_t kPatternMaxLen = 10;
inline constexpr std::size_t kSuMaxLen = 16;
inline constexpr std::size_t kThreeMaxCentral = 30;
inline constexpr std::size_t kThreeSolverCheck = 12;
inline constexpr std::size_t kLeavesMaxLen = 14;
inline constexpr std::size_t kCentralMaxLen = 14;
inline constexpr std::size_t kLongestPalindromeMaxCentral = 20;
inline constexpr std::size_t kUnborderedLen = 100;
}  // namespace defaults

// Hard limits; exceeding one throws ResourceError unless ignore_guards.
namespace guards {
inline constexpr std::size_t kTheoremMaxLen = 16;
inline constexpr std::size_t kHeritageMaxLen = 10;
inline constexpr std::size_t kDoublingMaxLen = 8;
inline constexpr std::size_t kPatternMaxLen = 12;
inline constexpr std::size_t kSuMaxLen = 20;
inline constexpr std::size_t kThreeMaxCentral = 40;
inline constexpr std::size_t kThreeSolverCheck = 16;
inline constexpr std::size_t kLeavesMaxLen = 16;
inline constexpr std::size_t kCentralMaxLen = 18;
inline constexpr std::size_t kLongestPalindromeMaxCentral = 30;
inline constexpr std::size_t kUnborderedLen = 300;
inline constexpr std::size_t kTmExactMaxDoubleK = 6;   // 2k without a cap
inline constexpr std::size_t kTmCappedMaxDoubleK = 8;   // 2k with a cap
}  // namespace guards

// mu(w) <= 3 iff w is a factor of a double Sturmian word, for every binary
// word of length 1..max_len.
VerificationReport verify_theorem_main(std::size_t max_len, const CampaignOptions& options = {});

// mu(v) <= mu(w) for every factor v of every binary w up to max_len.
VerificationReport verify_heritage(std::size_t max_len, const CampaignOptions& options = {});

// mu(d_a(w)) <= mu(w) + 1 for both letters, plus the dilation of the
// solver's witness: it generates the doubled word, grows by at most one and
// keeps its size when an odd generator is centered on a.
VerificationReport verify_doubling(std::size_t max_len, const CampaignOptions& options = {});

// mu(t_2), mu(t_4), ... for t_m = tau^m(0), with strict growth asserted where
// the results allow it. mu_cap == nullopt asks for exact values.
VerificationReport tm_growth(std::size_t max_k, std::optional<std::size_t> mu_cap,
                             const CampaignOptions& options = {});

// Forbidden-pattern consequences of mu(w) <= 3 on all binary words up to
// max_len.
VerificationReport verify_pattern_lemmas(std::size_t max_len, const CampaignOptions& options = {});

// Over a prefix of the source: unbordered factors of Sturmian sources are
// a·(central)·b, Lyndon factors of several lengths exist, and some factor has
// mu >= 3.
VerificationReport verify_unbordered_structure(const Source& source, std::size_t len,
                                               const CampaignOptions& options = {});

// witness_su generates every binary word of length 1..max_len.
VerificationReport verify_su(std::size_t max_len, const CampaignOptions& options = {});

// witness_three generates 0·x·1 and 1·x·0 for every central x with
// 1 <= |x| <= max_central that is not a letter power; the solver confirms
// mu <= 3 for |x| <= solver_check.
VerificationReport verify_three(std::size_t max_central, std::size_t solver_check,
                                const CampaignOptions& options = {});

// At most two leaves per label for every generating set of size <= 3 of an
// unbordered binary word in which both letters occur twice.
VerificationReport verify_leaves(std::size_t max_len, const CampaignOptions& options = {});

// Centrality: certificate vs. the palindrome-and-balanced definition vs. the
// coprime-periods characterisation (words up to max_len), and the longest
// palindromic prefix/suffix of 0·x·1 for central x up to max_central.
VerificationReport verify_central(std::size_t max_len, std::size_t max_central,
                                  const CampaignOptions& options = {});

}  // namespace palgen
