#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace rrs::cli {

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,
  kInvalidInput = 2,  // validation, parse errors, unknown algorithm, bad usage
  kNotRecovered = 3,  // only with --require-recovery
  kUnreachable = 4,
};

// args excludes the program name. Normal output goes to `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Applies RRS_LOG_LEVEL (error|warn|info|debug) to the default logger.
void configure_logging();

}  // namespace rrs::cli
