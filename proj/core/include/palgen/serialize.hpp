#pragma once

#include <string_view>

#include <nlohmann/json.hpp>

#include "palgen/combinatorics.hpp"
#include "palgen/generators.hpp"
#include "palgen/psi.hpp"
#include "palgen/solver.hpp"
#include "palgen/sturm.hpp"

namespace palgen {

// JSON shapes:
//   Interval      [i, j]
//   GeneratorSet  [[i, j], ...]
//   Partition     [[p, ...], ...]
//   MuResult      {"outcome":"exact","mu":k,"witness":[...]}
//                 {"outcome":"above_cap","cap":c,"lower_bound":b}
//                 {"outcome":"infinite"}
void to_json(nlohmann::json& j, const Interval& interval);
void to_json(nlohmann::json& j, const GeneratorSet& set);
void to_json(nlohmann::json& j, const Partition& partition);
void to_json(nlohmann::json& j, const MuResult& result);
void to_json(nlohmann::json& j, const Leaf& leaf);
void to_json(nlohmann::json& j, const CentralCertificate& cert);
void to_json(nlohmann::json& j, const LeanResult& result);
void to_json(nlohmann::json& j, const PsiScanResult& result);

std::string_view outcome_name(MuResult::Outcome outcome);

// Accepts "(i,j),(i,j)" or a JSON array "[[i,j],...]" and builds a set for
// words of length n. Throws ParseError or RangeError.
GeneratorSet parse_generator_set(std::string_view text, std::size_t n);

}  // namespace palgen
