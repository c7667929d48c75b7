#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qcorr::cli {

enum ExitCode : int {
  kOk = 0,
  kIoOrParse = 1,
  kInvalidState = 2,
  kUnsupportedDimension = 3,
  kViolation = 4,
};

/// Run the command line `args` (without the program name). Normal output
/// goes to `out` unless --out names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Shortest decimal string that reads back to the same double.
std::string formatDouble(double x);

}  // namespace qcorr::cli
