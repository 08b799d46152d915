#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace eqc {

enum ExitCode : int {
  kExitOk = 0,
  kExitInputError = 2,
  kExitIndeterminate = 3,
  kExitViolation = 4,
};

/// Runs the eqcompare command line. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace eqc
