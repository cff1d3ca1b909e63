#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "ramseq/attention.hpp"

namespace ramseq::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
  kSuccess = 0,
  kDomainFailure = 1,  // validation failure, reproduction mismatch, uncovered menu
  kUsageError = 2,     // bad flags, unreadable or malformed rule file
};

/// Parses `args` (without the program name) and dispatches a subcommand.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

/// Recomputes the beverage illustration from `fixture` and prints an
/// expected-versus-computed table. Returns kSuccess iff every quantity
/// matches within 1e-12.
int reproduce(const AttentionRule& fixture, std::ostream& out, bool exact = false, bool csv = false);

}  // namespace ramseq::cli
