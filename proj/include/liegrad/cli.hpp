#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace liegrad {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitDomainError = 1,
  kExitBadInput = 2,  // parse errors and algebras failing validation
  kExitFieldExtension = 3,
};

/// Runs `lie-gradings` with args (excluding the program name). Normal
/// output goes to `out` unless --output names a file; diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace liegrad
