#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace delpezzo {

/// Exit codes of run_cli.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line; `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace delpezzo
