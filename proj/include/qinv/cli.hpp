#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace qinv {

enum ExitCode : int {
  kExitOk = 0,
  kExitSuiteFailure = 1,
  kExitParse = 2,
  kExitCapacity = 3,
  kExitDegenerate = 4,
  kExitValidation = 5,
};

struct CheckRecord {
  std::string suite;
  std::string name;
  int k = 0;  // 0 when level independent
  bool passed = false;
  std::string detail;
};

/// Runs "kirby", "gamma" or "skein" at the given levels.
std::vector<CheckRecord> run_suite(std::string_view suite, const std::vector<int>& levels);

/// Entry point of the qinv tool; args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qinv
