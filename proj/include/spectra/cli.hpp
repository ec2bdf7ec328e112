#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace spectra {

// Runs the command-line front end on `args` (program name excluded), writing
// listings to `out` and diagnostics to `err`. Returns the process exit code:
//   0  success
//   1  usage, parse, or validation failure (also numerical tracking failures)
//   2  enumeration cap exceeded
//   3  cross-check mismatch (count --route all, verify)
//   4  incomplete sweep (paths still real at lambda_max)
//   5  degenerate merger (shared-path or >= 4-fold coalescence)
//   6  crossing observed pattern
//   7  output file write failure
// The environment variable SPECTRA_ENUM_CAP overrides the enumeration cap
// unless --cap is given explicitly.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace spectra
