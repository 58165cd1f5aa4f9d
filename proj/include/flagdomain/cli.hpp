#ifndef FLAGDOMAIN_CLI_HPP
#define FLAGDOMAIN_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace flagdomain::cli {

enum ExitCode : int {
  kSuccess = 0,
  kInvalidInput = 1,
  kSelftestFailure = 2,
  kChainFailure = 3,
};

/// Runs one invocation; args excludes the program name. Results go to
/// `out` (or the --out file), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace flagdomain::cli

#endif
