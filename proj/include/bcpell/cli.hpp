#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace bcpell {

enum class OutputFormat { text, json, csv };

/// Exit codes for `check`: all selected identities hold / some fail / usage or internal error.
inline constexpr int exit_holds = 0;
inline constexpr int exit_fails = 1;
inline constexpr int exit_error = 2;

/// Runs the command line `args` (args[0] is the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace bcpell
