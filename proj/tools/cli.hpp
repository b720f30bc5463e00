#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mobius::cli {

// Process exit codes. Usage errors use CLI11's own code (nonzero).
enum ExitCode : int {
  kOk = 0,
  kFailure = 1,
  kParseError = 3,
  kIoError = 4,
  kUnsupportedConversion = 5,
  kCapacityExceeded = 6,
  kFrameMismatch = 7,
  kTotalConflict = 8,
  kInvalidBba = 9,
  kNotAPartialOrder = 10,
};

// Environment variable capping the frame size of input set functions.
inline constexpr const char* kMaxNEnv = "MOBIUS_MAX_N";
inline constexpr std::size_t kWarnAboveN = 22;

// Runs one command line. Data destined for "-" goes to `out`; diagnostics go
// to `err` as "mobius: error[<code>]: <message>".
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mobius::cli
