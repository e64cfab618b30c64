#ifndef GINOE_VERIFY_HPP
#define GINOE_VERIFY_HPP

#include <functional>
#include <string>
#include <vector>

namespace ginoe {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

// Run the invariant suites; `full` enlarges the grids.  Results in a fixed
// deterministic order.
std::vector<CheckResult> run_verification(bool full);

}  // namespace ginoe

#endif
