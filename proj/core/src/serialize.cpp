#include "palgen/serialize.hpp"

#include <regex>
#include <string>

#include "palgen/error.hpp"

namespace palgen {

using nlohmann::json;

void to_json(json& j, const Interval& interval) { j = json::array({interval.i, interval.j}); }

void to_json(json& j, const GeneratorSet& set) {
  j = json::array();
  for (const auto& iv : set) j.push_back(iv);
}

void to_json(json& j, const Partition& partition) { j = partition.classes(); }

std::string_view outcome_name(MuResult::Outcome outcome) {
  switch (outcome) {
    case MuResult::Outcome::Exact:
      return "exact";
    case MuResult::Outcome::AboveCap:
      return "above_cap";
    case MuResult::Outcome::Infinite:
      return "infinite";
  }
  return "unknown";
}

void to_json(json& j, const MuResult& result) {
  j = json::object();
  j["outcome"] = outcome_name(result.outcome);
  switch (result.outcome) {
    case MuResult::Outcome::Exact:
      j["mu"] = result.value;
      j["witness"] = result.witness;
      break;
    case MuResult::Outcome::AboveCap:
      j["cap"] = result.cap;
      j["lower_bound"] = result.lower_bound;
      break;
    case MuResult::Outcome::Infinite:
      break;
  }
}

void to_json(json& j, const Leaf& leaf) {
  j = json{{"position", leaf.position}, {"label", std::string(1, display_char(leaf.label))}};
}

void to_json(json& j, const CentralCertificate& cert) {
  if (cert.kind == CentralCertificate::Kind::LetterPower) {
    j = json{{"kind", "letter_power"},
             {"letter", std::string(1, display_char(cert.letter))},
             {"power", cert.power}};
  } else {
    j = json{{"kind", "composite"}, {"u", cert.u.str()}, {"v", cert.v.str()},
             {"p", cert.p},         {"q", cert.q}};
  }
}

void to_json(json& j, const LeanResult& result) {
  j = json{{"A", result.A.str()}, {"lean", result.lean.str()}};
}

void to_json(json& j, const PsiScanResult& result) {
  j = json{{"source", result.source.str()},
           {"prefix_len", result.prefix_len},
           {"factor_cap", result.factor_cap},
           {"mu_cap", result.mu_cap},
           {"max_mu", result.max_mu},
           {"argmax_factor", result.argmax_factor.str()},
           {"distinct_factors", result.distinct_factors},
           {"evaluated", result.evaluated}};
}

GeneratorSet parse_generator_set(std::string_view text, std::size_t n) {
  std::vector<Interval> intervals;
  const std::string s(text);
  const auto first = s.find_first_not_of(" \t");
  if (first != std::string::npos && s[first] == '[') {
    json parsed;
    try {
      parsed = json::parse(s);
    } catch (const json::parse_error& e) {
      throw ParseError(std::string("generator set is not valid JSON: ") + e.what(), e.byte);
    }
    if (!parsed.is_array()) throw ParseError("generator set must be an array", 1);
    for (const auto& item : parsed) {
      if (!item.is_array() || item.size() != 2 || !item[0].is_number_unsigned() ||
          !item[1].is_number_unsigned()) {
        throw ParseError("each generator must be a pair [i,j] of positive integers", 1);
      }
      intervals.emplace_back(item[0].get<std::size_t>(), item[1].get<std::size_t>());
    }
    return GeneratorSet(n, std::move(intervals));
  }

  static const std::regex pair_re(R"(\s*\(\s*(\d+)\s*,\s*(\d+)\s*\)\s*(,|$))");
  std::size_t pos = 0;
  while (pos < s.size() && s.find_first_not_of(" \t", pos) != std::string::npos) {
    std::smatch m;
    if (!std::regex_search(s.cbegin() + static_cast<std::ptrdiff_t>(pos), s.cend(), m, pair_re,
                           std::regex_constants::match_continuous)) {
      throw ParseError("expected \"(i,j)\" at index " + std::to_string(pos + 1), pos + 1);
    }
    intervals.emplace_back(std::stoul(m[1].str()), std::stoul(m[2].str()));
    pos += static_cast<std::size_t>(m.length(0));
  }
  return GeneratorSet(n, std::move(intervals));
}

}  // namespace palgen
