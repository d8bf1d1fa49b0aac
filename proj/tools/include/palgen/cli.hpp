#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace palgen::cli {

// Exit codes: 0 success or passing campaign, 1 domain error or failing
// campaign, 2 usage error or resource guard.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

// Runs one command. `args` excludes the program name. JSON (or JSONL for
// campaigns) goes to `out`; usage text and summaries go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace palgen::cli
