#pragma once

#include <cstdint>
#include <memory>
#include <random>

#include "clbits/dyadic.hpp"
#include "clbits/efb_convert.hpp"
#include "clbits/multivector.hpp"

namespace clbits {

/// Random dyadic p / 2^e with |p| <= 64 and e <= 4; never zero when nonzero is set.
DyadicRational random_dyadic(std::mt19937_64& rng, bool nonzero = false);

/// Random multivector; each blade is present with probability density.
/// density = 1 gives a dense operand with every coefficient nonzero.
Multivector random_multivector(const std::shared_ptr<const Metric>& metric, std::mt19937_64& rng,
                               double density = 0.5);

/// Dense EFB operand with every coefficient nonzero.
ExactEFB random_dense_efb(unsigned m, std::mt19937_64& rng);

}  // namespace clbits
