#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace clbits {

enum class VerifyLevel { Quick, Full };

struct SuiteResult {
  std::string name;
  std::uint64_t checked = 0;
  std::uint64_t failures = 0;
  double seconds = 0;
  std::string first_failure;

  bool passed() const { return failures == 0 && checked > 0; }
};

/// Runs the invariant suites of every module. Full runs suites concurrently;
/// results always come back in the same order.
std::vector<SuiteResult> run_verification(VerifyLevel level);

}  // namespace clbits
