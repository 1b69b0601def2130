#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace aoc::cli {

enum ExitCode : int {
  kSuccess = 0,
  kViolation = 1,   ///< constraint violation, rejected check, Incompatible verdict
  kParseError = 2,  ///< command line, JSON or schema error
};

/// Runs `aoc <command> ...` (args excludes the program name). The JSON report
/// goes to `out`, a one-line human summary to `err`.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace aoc::cli
