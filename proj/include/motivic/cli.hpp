#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace motivic {

// Exit codes are part of the command-line contract.
enum ExitCode : int {
  kExitOk = 0,
  kExitFailure = 1,
  kExitValidation = 2,
  kExitMissingRestriction = 3,
  kExitUnsupportedShape = 4,
  kExitDescentFailure = 5,
};

// Fixture directory used by --fixture and selftest: $MOTIVIC_FIXTURE_DIR if
// set, else the build-time default.
std::string fixture_dir();

// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace motivic
