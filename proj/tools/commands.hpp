#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace mombound::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
  kOk = 0,
  kNegativeVerdict = 1,  // counterexample found / not copositive
  kInputError = 2,       // unreadable file, malformed JSON, bad flags
  kCapabilityError = 3,  // unsupported measure or numerical failure
};

/// Runs the tool with args (args[0] is the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mombound::cli
