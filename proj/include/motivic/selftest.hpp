#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace motivic {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  std::string detail;
};

// The regression and invariant suite behind `selftest` and the acceptance
// binary. Reads the shipped fixtures from `fixture_dir`.
std::vector<CriterionResult> run_selftest(const std::string& fixture_dir, std::uint64_t seed = 20260101);

}  // namespace motivic
