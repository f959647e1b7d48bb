#pragma once

#include <string>
#include <vector>

namespace whlab::cli {

enum ExitCode : int {
  exit_ok = 0,
  exit_failed = 1,  // selftest found a failing check
  exit_domain = 2,
  exit_budget = 3,
};

struct CliResult {
  int exit_code = exit_ok;
  std::string out;
  std::string err;
};

/// Runs one command line (without the program name). Never throws; errors are
/// reported on `err` with the matching exit code.
CliResult run(std::vector<std::string> const& args);

}  // namespace whlab::cli
