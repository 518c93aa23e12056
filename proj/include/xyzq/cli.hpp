#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace xyzq {

enum ExitCode : int {
  kExitOk = 0,
  kExitMismatch = 1,
  kExitUsage = 2,
  kExitIrregular = 3,
  kExitFormula = 4,
};

/// Runs one command line (args excludes the program name). Data goes to
/// `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace xyzq
