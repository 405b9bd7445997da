#pragma once

#include "clbits/binary.hpp"
#include "clbits/metric.hpp"
#include "clbits/multivector.hpp"

namespace clbits {

/// omega = gamma_1 gamma_2 ... gamma_n as a blade (the all-ones mask).
Blade volume_element(const Metric& metric);

/// omega * omega computed by blade multiplication.
SignBit omega_squared_oracle(const Metric& metric);

/// True iff omega is a non-scalar central element, i.e. it commutes with every
/// generator, decided by forming each commutator [omega, gamma_i] explicitly.
/// For n = 0 omega is the scalar 1 and the answer is false.
bool center_check(const Metric& metric);

/// tau over the block metric of (k, l): gamma_{k+1}...gamma_{k+l} for k, l
/// even, gamma_1...gamma_k for k, l odd. Throws std::domain_error for odd k+l.
Blade tau_blade(unsigned k, unsigned l);

/// tau * tau by blade multiplication over the block metric. Odd n throws.
SignBit tau_squared_oracle(unsigned k, unsigned l);
/// (omega tau) * (omega tau) by blade multiplication. Odd n throws.
SignBit omega_tau_squared_oracle(unsigned k, unsigned l);

/// Outcome of conjugating every generator by omega, tau and omega*tau.
struct InvolutionCheck {
  bool omega_negates = false;        // omega g omega^-1 = -g
  bool tau_dualizes = false;         // tau g tau^-1 = g^-1
  bool omega_tau_antidualizes = false;  // (omega tau) g (omega tau)^-1 = -g^-1

  bool all() const { return omega_negates && tau_dualizes && omega_tau_antidualizes; }
};

/// Verifies the inner involutions generated by omega and tau on every
/// generator of the block metric (k, l). Odd n throws.
InvolutionCheck check_inner_involutions(unsigned k, unsigned l);

}  // namespace clbits
