#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ured {

/// Entry point behind the uredkit binary, separated for in-process testing.
/// Returns the process exit code: 0 success, 1 failed invariant or failed
/// acceptance criterion, 2 malformed input.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ured
