#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace biharm::cli {

enum ExitCode : int {
  kSuccess = 0,
  kNonConvergence = 1,
  kDomainError = 2,
  kUsageError = 64,
};

/// Parses and executes one command. `args` excludes the program name. The
/// payload goes to `out` (or to the --out file), diagnostics to `err`.
[[nodiscard]] int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace biharm::cli
