#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace permderiv::cli {

/// Exit codes of the command-line front end.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFalse = 1;   // predicate false, search failure, failed verification
inline constexpr int kExitInvalid = 2; // unparsable or invalid input

/// Runs one command. `args` excludes the program name.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

/// Parses "5,2,7" or "-3,5,-3" (no spaces required; surrounding spaces
/// tolerated). Throws permderiv::Error(invalid_argument) on malformed text.
std::vector<int> parse_int_list(const std::string& text);

std::string join(std::span<const int> values);

} // namespace permderiv::cli
