#pragma once

#include <iosfwd>
#include <string_view>

namespace polyapprox {

inline constexpr std::string_view kVersion = "1.0.0";

enum ExitCode : int { kExitOk = 0, kExitUsage = 1, kExitData = 2 };

/// Entry point for the `polyapprox` command. Streams are injectable so tests
/// can capture output.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace polyapprox
