#pragma once

// Cross-checks run by the verify command.

#include <string>
#include <vector>

#include "similitude/counting.hpp"

namespace similitude {

struct CheckResult {
  std::string name;
  bool passed;
  bool informational;
  std::string detail;
};

std::vector<CheckResult> verify_target(TargetId target, std::size_t n);

}  // namespace similitude
