#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hcd {

enum ExitCode { kExitOk = 0, kExitUsage = 2, kExitData = 3, kExitDegenerate = 4 };

/// Entry point of the `hybridcd` tool. `args` excludes the program name.
/// Errors are reported on `err` and mapped to ExitCode values.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hcd
