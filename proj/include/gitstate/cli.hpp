#pragma once

#include <string>
#include <vector>

namespace gitstate {

struct CliResult {
  std::string out;  // report for standard output
  std::string err;  // diagnostics for standard error
  int exit_code;    // 0 decision computed, 1 internal error or timeout, 2 bad input
};

// args excludes the program name.
CliResult run_cli(const std::vector<std::string>& args);

}  // namespace gitstate
