#pragma once

// Command-line front end: packets, ktypes, hwv-check, projector, lfactor,
// gamma, bm-verify.  Lives in the library so tests can drive it in-process.

#include <iosfwd>
#include <string>
#include <vector>

namespace sp6 {

/// Runs one subcommand (args excludes the program name).  Writes the report
/// to out — JSON with --json, an aligned table otherwise — and usage errors
/// to err.  Returns 0 on success, 2 on usage errors, and 1 on computation
/// errors, in which case out receives a machine-readable error object.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sp6
