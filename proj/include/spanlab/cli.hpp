#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace spanlab {

inline constexpr std::string_view kVersion = "1.0.0";

// Exit codes returned by dispatch.
enum ExitCode : int { kExitOk = 0, kExitDomain = 1, kExitUsage = 2, kExitSuite = 3 };

// args excludes the program name. Prints the envelope (or a plain listing) to out,
// diagnostics and usage to err.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Rebuilds an argument list from a JSON envelope's command and inputs, with --json appended.
std::vector<std::string> replay_args(std::string_view envelope_json);

}  // namespace spanlab
