#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace lisakit::cli {

enum ExitCode : int {
  kOk = 0,
  kInputError = 2,
  kValidationError = 3,
  kIdentityFailure = 4,
  kClaimNotRefuted = 5,
};

/// Runs `lisa-kit` with argv-style arguments (args[0] is the program name).
/// Results go to `out` unless --out redirects them; diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace lisakit::cli
