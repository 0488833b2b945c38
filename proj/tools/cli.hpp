#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace projent::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kShape = 2,
  kResourceCap = 3,
  kVerificationFailed = 4,
};

// Flags of one invocation; embedded verbatim in every report.
struct RunConfig {
  std::string command;
  std::string suite;
  std::string input;
  std::string output;
  std::string kind = "segre";
  std::string dims;
  std::string shape;
  double norm_const = 1.0;
  std::uint64_t seed = 0;
  int trials = 100;
  double tolerance = 1e-9;
  double slack = 1e-9;
  int party = 1;
  int observe_party = 0;
  std::string row_pairs = "all";
  bool force = false;
  bool normalize = false;
};

// Runs `projent <args...>` (args excludes the program name) and returns the
// process exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace projent::cli
