#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ffhyper {

/// Exit codes: 0 everything agreed, 1 some identity or theorem mismatched,
/// 2 invalid input (or an inapplicable single computation).
inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitInvalid = 2;

/// Environment variable naming the default directory for report files.
inline constexpr const char* kOutputDirEnv = "FFHYPER_OUTPUT_DIR";

/// Runs the command line `args` (args[0] is the program name) with subcommands
/// trace, verify, identities and bench.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ffhyper
