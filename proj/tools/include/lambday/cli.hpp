#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lambday::cli {

/// Exit statuses.
inline constexpr int kSuccess = 0;
inline constexpr int kNegative = 1;
inline constexpr int kFailure = 2;

/// Runs one command line (without the program name). Never throws.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Reads commands from `in`, one per line, as `subcommand rest-of-line`.
/// The rest of the line is passed as a single argument.
int repl(std::istream& in, std::ostream& out, std::ostream& err, bool prompt);

}  // namespace lambday::cli
