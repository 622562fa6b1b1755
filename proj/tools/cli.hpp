#pragma once

#include <iosfwd>

namespace motives::cli {

/// Full command dispatch; returns the process exit code (0 pass, 1 any
/// verification failure, 2 usage or configuration error).
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace motives::cli
