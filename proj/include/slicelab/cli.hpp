#pragma once

// The slicelab command line: one subcommand per module plus verify-all.
// Exit codes: 0 success, 1 a checked inequality failed, 2 usage or guard error.

#include <ostream>
#include <string>
#include <vector>

namespace slicelab::cli {

/// Runs the command given by `args` (program name excluded), writing the
/// report to `out` (or the --out file) and diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace slicelab::cli
