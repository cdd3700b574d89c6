#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hyperclique::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kInvalidInput = 2,
  kSizeRefusal = 3,
  kInconclusive = 4,
  kConsistency = 5,
};

/// Runs one subcommand. `args` excludes the program name. Reports go to
/// `out` as JSON; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hyperclique::cli
