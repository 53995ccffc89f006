#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace trilie {

/// Exit statuses of the command-line front end.
enum ExitCode : int {
    kExitExpected = 0,    ///< the suite's expected verdict holds
    kExitUnexpected = 1,  ///< the verdict differs from the expected one
    kExitUsage = 2,       ///< parse or configuration error
};

/// Runs one command line (args excludes the program name) and returns its
/// exit status. Reports go to `out`, diagnostics to `err`.
///
///   bracket X Y Z [--oracle]
///   check fi|table|module-t|lie-psi|lie-phi|induced-psi|pullback-phi
///   decompose EXPR [--verify]
///   orbit T|psi|phi --start KEY
///   weights T [--start KEY]
///
/// Shared options: --window lo..hi, --lambda p/q|sym, --mu p/q|sym,
/// --probes k1,k2,..., --output text|machine, --jobs N, --limit N.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace trilie
