#pragma once

#include <cstdint>

namespace clbits {

/// Operation counters filled in by the instrumented product kernels.
struct OpCounts {
  std::uint64_t multiplies = 0;      // scalar coefficient products
  std::uint64_t sign_evaluations = 0;  // blade-pair or EFB-triple sign computations

  OpCounts& operator+=(const OpCounts& o) {
    multiplies += o.multiplies;
    sign_evaluations += o.sign_evaluations;
    return *this;
  }
};

}  // namespace clbits
