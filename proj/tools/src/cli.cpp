#include "palgen/cli.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <ostream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "palgen/combinatorics.hpp"
#include "palgen/error.hpp"
#include "palgen/generators.hpp"
#include "palgen/psi.hpp"
#include "palgen/serialize.hpp"
#include "palgen/solver.hpp"
#include "palgen/source.hpp"
#include "palgen/sturm.hpp"
#include "palgen/verify.hpp"
#include "palgen/witness.hpp"

namespace palgen::cli {

namespace {

using nlohmann::json;

const std::vector<std::string> kCampaigns = {"theorem", "heritage", "doubling", "patterns",
                                             "unbordered", "su", "three", "leaves",
                                             "central", "tm-growth"};

std::string error_kind(const Error& e) {
  if (dynamic_cast<const ParseError*>(&e)) return "parse";
  if (dynamic_cast<const DomainError*>(&e)) return "domain";
  if (dynamic_cast<const UndefinedInputError*>(&e)) return "undefined_input";
  if (dynamic_cast<const RangeError*>(&e)) return "range";
  if (dynamic_cast<const DimensionError*>(&e)) return "dimension";
  if (dynamic_cast<const ContractError*>(&e)) return "contract";
  if (dynamic_cast<const ResourceError*>(&e)) return "resource_guard";
  return "error";
}

// Evaluates fn, mapping "not defined for this word" to null.
json defined_or_null(const std::function<json()>& fn) {
  try {
    return fn();
  } catch (const DomainError&) {
    return nullptr;
  } catch (const UndefinedInputError&) {
    return nullptr;
  }
}

Letter parse_letter(const std::string& text) {
  const int code = text.size() == 1 ? letter_code(text[0]) : -1;
  if (code < 0) throw ParseError("expected a single letter, got '" + text + "'", 1);
  return static_cast<Letter>(code);
}

std::string mu_summary(const Word& w, const MuResult& r) {
  switch (r.outcome) {
    case MuResult::Outcome::Exact:
      return "mu(" + w.str() + ") = " + std::to_string(r.value);
    case MuResult::Outcome::AboveCap:
      return "mu(" + w.str() + ") > " + std::to_string(r.cap);
    case MuResult::Outcome::Infinite:
      return "mu(" + w.str() + ") = infinity";
  }
  return {};
}

struct Settings {
  bool quiet = false;
  unsigned threads = 1;
  bool no_guard = false;

  std::string word;
  std::size_t cap = 0;
  CLI::Option* cap_opt = nullptr;
  std::string set_text;
  CLI::Option* set_opt = nullptr;
  std::string construction;
  std::string letter;
  std::string letters;
  std::string source_text;
  std::size_t len = 0;
  CLI::Option* len_opt = nullptr;
  std::size_t factor_cap = 16;
  std::size_t max_len = 0;
  CLI::Option* max_len_opt = nullptr;
  std::size_t max_central = 0;
  CLI::Option* max_central_opt = nullptr;
  std::size_t solver_check = defaults::kThreeSolverCheck;
  std::size_t max_k = 2;
  std::string campaign;
};

json cmd_mu(const Settings& s, std::ostream& err) {
  const Word w = parse_word(s.word);
  const MuResult r = mu(w, s.cap_opt->count() ? std::optional(s.cap) : std::nullopt);
  if (!s.quiet) err << mu_summary(w, r) << '\n';
  return r;
}

json cmd_generates(const Settings& s, std::ostream& err) {
  const Word w = parse_word(s.word);
  const GeneratorSet set = parse_generator_set(s.set_text, w.size());
  json non_palindromes = json::array();
  for (const auto& iv : set) {
    if (!is_palindrome(w.factor(iv))) non_palindromes.push_back(iv);
  }
  const bool ok = generates(set, w);
  json out = {{"generates", ok},
              {"size", set.size()},
              {"closure", closure(set)},
              {"letter_partition", letter_partition(w)},
              {"non_palindromes", non_palindromes}};
  if (ok) out["leaves"] = leaves(set, w);
  if (!s.quiet) err << set.size() << " generators " << (ok ? "generate " : "do not generate ") << w.str() << '\n';
  return out;
}

json cmd_witness(const Settings& s, std::ostream& err) {
  const Word w = parse_word(s.word);
  json out = {{"construction", s.construction}};
  GeneratorSet set(w.size());
  Word target = w;
  if (s.construction == "su") {
    set = witness_su(w);
  } else if (s.construction == "three") {
    auto three = witness_three(w);
    if (!three) {
      throw DomainError("\"" + w.str() + "\" is not of the form a·x·b with x central and a != b");
    }
    set = *three;
  } else {
    if (s.letter.empty()) throw ParseError("--construction dilate needs --letter", 1);
    const Letter a = parse_letter(s.letter);
    GeneratorSet base(w.size());
    if (s.set_opt->count()) {
      base = parse_generator_set(s.set_text, w.size());
    } else {
      const MuResult r = mu(w);
      if (!r.is_exact()) throw DomainError("\"" + w.str() + "\" has no generating set to dilate");
      base = r.witness;
    }
    const Dilation d = dilate(base, w, a);
    out["source_word"] = w.str();
    out["source_set"] = base;
    out["centered_odd_generator"] = has_centered_odd_generator(base, w, a);
    out["appended_trivial"] = d.appended_trivial;
    set = d.set;
    target = d.word;
  }
  const bool ok = generates(set, target);
  out["word"] = target.str();
  out["set"] = set;
  out["size"] = set.size();
  out["generates"] = ok;
  if (!s.quiet) err << s.construction << ": " << set.size() << " generators for " << target.str() << '\n';
  return out;
}

json cmd_classify(const Settings& s, std::ostream& err) {
  const Word w = parse_word(s.word);
  json out = {{"word", w.str()},
              {"length", w.size()},
              {"alphabet_size", w.alphabet_size()},
              {"binary", w.is_binary()},
              {"palindrome", is_palindrome(w)}};
  out["unbordered"] = defined_or_null([&] { return json(is_unbordered(w)); });
  out["lyndon"] = defined_or_null([&] { return json(is_lyndon(w)); });
  out["periods"] = defined_or_null([&] { return json(periods(w)); });
  out["balanced"] = defined_or_null([&] { return json(is_balanced(w)); });
  out["unbalance_witness"] = defined_or_null([&]() -> json {
    const auto u = unbalance_witness(w);
    if (!u) return nullptr;
    return {{"a", std::string(1, display_char(u->a))}, {"u", u->u.str()}};
  });
  out["central"] = defined_or_null([&]() -> json {
    const auto c = is_central(w);
    return c ? json(*c) : json(nullptr);
  });
  out["A"] = defined_or_null([&] { return json(doubling_set(w).str()); });
  out["lean"] = defined_or_null([&] { return json(lean(w).lean.str()); });
  out["double_sturmian_factor"] = defined_or_null([&] { return json(is_double_sturmian_factor(w)); });
  if (!s.quiet) {
    err << w.str() << ": " << (out["double_sturmian_factor"] == true ? "" : "not ")
        << "a factor of a double Sturmian word\n";
  }
  return out;
}

json cmd_lean(const Settings& s, std::ostream& err) {
  const Word w = parse_word(s.word);
  const LeanResult r = lean(w);
  json out = r;
  out["balanced"] = is_balanced(r.lean);
  out["double_sturmian_factor"] = is_double_sturmian_factor(w);
  if (!s.quiet) err << "lean(" << w.str() << ") = " << r.lean.str() << " with A = {" << r.A.str() << "}\n";
  return out;
}

json cmd_double(const Settings& s, std::ostream& err) {
  Word w = parse_word(s.word);
  std::string seen;
  for (char c : s.letters) {
    if (seen.find(c) != std::string::npos) continue;
    seen += c;
    w = double_letter(w, parse_letter(std::string(1, c)));
  }
  if (!s.quiet) err << "d_{" << seen << "}(" << s.word << ") = " << w.str() << '\n';
  return w.str();
}

json cmd_gen(const Settings& s, std::ostream& err) {
  const Source src = Source::parse(s.source_text);
  const Word w = src.prefix(s.len);
  if (!s.quiet) err << src.str() << ": prefix of length " << w.size() << '\n';
  return w.str();
}

json cmd_psi(const Settings& s, std::ostream& err) {
  const Source src = Source::parse(s.source_text);
  const std::size_t cap = s.cap_opt->count() ? s.cap : 4;
  const std::size_t len = s.len_opt->count() ? s.len : 64;
  const PsiScanResult r = psi_scan(src, len, s.factor_cap, cap, s.threads);
  if (!s.quiet) {
    err << "psi scan of " << src.str() << ": " << mu_summary(r.argmax_factor, r.max_mu) << " ("
        << r.evaluated << " of " << r.distinct_factors << " distinct factors solved)\n";
  }
  return r;
}

VerificationReport run_campaign(const Settings& s) {
  CampaignOptions options;
  options.threads = s.threads;
  options.ignore_guards = s.no_guard;
  const auto max_len = [&](std::size_t fallback) {
    return s.max_len_opt->count() ? s.max_len : fallback;
  };
  const auto max_central = [&](std::size_t fallback) {
    return s.max_central_opt->count() ? s.max_central : fallback;
  };
  const std::string& c = s.campaign;
  if (c == "theorem") return verify_theorem_main(max_len(defaults::kTheoremMaxLen), options);
  if (c == "heritage") return verify_heritage(max_len(defaults::kHeritageMaxLen), options);
  if (c == "doubling") return verify_doubling(max_len(defaults::kDoublingMaxLen), options);
  if (c == "patterns") return verify_pattern_lemmas(max_len(defaults::kPatternMaxLen), options);
  if (c == "su") return verify_su(max_len(defaults::kSuMaxLen), options);
  if (c == "leaves") return verify_leaves(max_len(defaults::kLeavesMaxLen), options);
  if (c == "three") {
    return verify_three(max_central(defaults::kThreeMaxCentral), s.solver_check, options);
  }
  if (c == "central") {
    return verify_central(max_len(defaults::kCentralMaxLen),
                          max_central(defaults::kLongestPalindromeMaxCentral), options);
  }
  if (c == "unbordered") {
    const Source src = Source::parse(s.source_text.empty() ? "std:1" : s.source_text);
    return verify_unbordered_structure(src, s.len_opt->count() ? s.len : defaults::kUnborderedLen,
                                       options);
  }
  return tm_growth(s.max_k, s.cap_opt->count() ? std::optional(s.cap) : std::nullopt, options);
}

int emit_report(const VerificationReport& report, const Settings& s, std::ostream& out,
                std::ostream& err) {
  write_jsonl(report, out);
  if (!s.quiet) {
    err << report.campaign << ": " << (report.passed() ? "pass" : "FAIL") << " ("
        << report.cases_checked() << " cases, " << report.failures().size() << " failures, "
        << report.elapsed.count() << " ms)\n";
  }
  return report.passed() ? kExitOk : kExitFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Palindromic generators of finite words", "palgen"};
  app.require_subcommand(1);
  app.fallthrough();
  Settings s;
  app.add_flag("-q,--quiet", s.quiet, "No summary on standard error");
  app.add_option("-t,--threads", s.threads, "Worker threads for campaigns and psi scans")
      ->check(CLI::Range(1U, 256U));

  const auto word_arg = [&](CLI::App* sub) {
    sub->add_option("word", s.word, "Word over 0, 1, a-z")->required();
  };
  const auto cap_opt = [&](CLI::App* sub, const std::string& help) {
    s.cap_opt = sub->add_option("--cap", s.cap, help);
  };

  auto* mu_cmd = app.add_subcommand("mu", "Minimum number of palindromic generators");
  word_arg(mu_cmd);
  cap_opt(mu_cmd, "Stop once mu is known to exceed this value");

  auto* gen_cmd = app.add_subcommand("generates", "Check whether a generator set generates a word");
  word_arg(gen_cmd);
  s.set_opt = gen_cmd->add_option("--set", s.set_text, "\"(i,j),(i,j)\" or [[i,j],...]")->required();

  auto* wit_cmd = app.add_subcommand("witness", "Build a generating set by construction");
  word_arg(wit_cmd);
  wit_cmd->add_option("--construction", s.construction)
      ->required()
      ->check(CLI::IsMember({"su", "three", "dilate"}));
  wit_cmd->add_option("--letter", s.letter, "Letter to double (dilate)");
  auto* wit_set = wit_cmd->add_option("--set", s.set_text, "Set to dilate; defaults to the solver's witness");

  auto* cls_cmd = app.add_subcommand("classify", "Structural properties of a word");
  word_arg(cls_cmd);

  auto* lean_cmd = app.add_subcommand("lean", "Doubling set and lean word");
  word_arg(lean_cmd);

  auto* dbl_cmd = app.add_subcommand("double", "Apply the doubling morphism");
  word_arg(dbl_cmd);
  dbl_cmd->add_option("-A,--letters", s.letters, "Letters to double, e.g. 01")->required();

  auto* src_cmd = app.add_subcommand("gen", "Prefix of an infinite word");
  src_cmd->add_option("source,--source", s.source_text, "tm | std:d1,d2,... | periodic:block | double:std:.../A=01")
      ->required();
  auto* gen_len = src_cmd->add_option("--len", s.len, "Prefix length")->required();

  auto* psi_cmd = app.add_subcommand("psi", "Largest mu over the factors of a prefix");
  psi_cmd->add_option("--source", s.source_text)->required();
  auto* psi_len = psi_cmd->add_option("--len", s.len, "Prefix length (default 64)");
  psi_cmd->add_option("--factor-cap", s.factor_cap, "Longest factor examined")->capture_default_str();
  auto* psi_cap = psi_cmd->add_option("--cap", s.cap, "mu cap (default 4)");

  auto* ver_cmd = app.add_subcommand("verify", "Run a verification campaign");
  ver_cmd->add_option("campaign", s.campaign)->required()->check(CLI::IsMember(kCampaigns));
  s.max_len_opt = ver_cmd->add_option("--max-len", s.max_len, "Longest word enumerated");
  auto* ver_len = ver_cmd->add_option("--len", s.len, "Prefix length (unbordered)");
  ver_cmd->add_option("--source", s.source_text, "Source (unbordered); default std:1");
  s.max_central_opt = ver_cmd->add_option("--max-central", s.max_central, "Longest central word (three, central)");
  ver_cmd->add_option("--solver-check", s.solver_check, "Solver cross-check bound (three)")
      ->capture_default_str();
  ver_cmd->add_option("--max-k", s.max_k, "Largest k for t_2k (tm-growth)")->capture_default_str();
  auto* ver_cap = ver_cmd->add_option("--cap", s.cap, "mu cap (tm-growth)");
  ver_cmd->add_flag("--no-guard", s.no_guard, "Lift the resource guards");

  auto* tm_cmd = app.add_subcommand("tm-growth", "mu of the Thue-Morse prefixes t_2, t_4, ...");
  tm_cmd->add_option("--max-k", s.max_k, "Largest k for t_2k")->capture_default_str();
  auto* tm_cap = tm_cmd->add_option("--cap", s.cap, "mu cap");
  tm_cmd->add_flag("--no-guard", s.no_guard, "Lift the resource guards");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n";
    const auto subs = app.get_subcommands();
    err << (subs.empty() ? app.help() : subs.front()->help());
    return kExitUsage;
  }

  // Options that exist on several verbs share one field; point the presence
  // checks at whichever verb was actually chosen.
  if (*wit_cmd) s.set_opt = wit_set;
  if (*psi_cmd) {
    s.cap_opt = psi_cap;
    s.len_opt = psi_len;
  }
  if (*src_cmd) s.len_opt = gen_len;
  if (*ver_cmd) {
    s.cap_opt = ver_cap;
    s.len_opt = ver_len;
  }
  if (*tm_cmd) {
    s.cap_opt = tm_cap;
    s.campaign = "tm-growth";
  }
  if (*mu_cmd) s.cap_opt = mu_cmd->get_option("--cap");

  try {
    if (*ver_cmd || *tm_cmd) return emit_report(run_campaign(s), s, out, err);
    json result;
    if (*mu_cmd) result = cmd_mu(s, err);
    else if (*gen_cmd) result = cmd_generates(s, err);
    else if (*wit_cmd) result = cmd_witness(s, err);
    else if (*cls_cmd) result = cmd_classify(s, err);
    else if (*lean_cmd) result = cmd_lean(s, err);
    else if (*dbl_cmd) result = cmd_double(s, err);
    else if (*src_cmd) result = cmd_gen(s, err);
    else result = cmd_psi(s, err);
    out << result.dump() << '\n';
    return kExitOk;
  } catch (const ResourceError& e) {
    out << json{{"error", e.what()}, {"kind", error_kind(e)}}.dump() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    out << json{{"error", e.what()}, {"kind", error_kind(e)}}.dump() << '\n';
    return kExitFailure;
  }
}

}  // namespace palgen::cli
