#pragma once

#include <memory>
#include <utility>
#include <vector>

#include "clbits/dyadic.hpp"
#include "clbits/efb.hpp"
#include "clbits/efb_kernels.hpp"
#include "clbits/multivector.hpp"

namespace clbits {

using ExactEFB = EFBMultivector<DyadicRational>;

/// Shared interleaved metric of Cl(m,m).
std::shared_ptr<const Metric> neutral_metric(unsigned m);

struct WittBasis {
  std::vector<Multivector> p;  // p_i = (g_{2i-1} + g_{2i}) / 2
  std::vector<Multivector> q;  // q_i = (g_{2i-1} - g_{2i}) / 2
};

/// Null basis of Cl(m,m) in blade coordinates. Throws for m = 0.
WittBasis witt_basis(unsigned m);

/// The EFB element written out in blades (product of its letters).
Multivector efb_to_blades(const EFBElement& e);

/// Sum of xi_ab Psi_ab in blades.
Multivector efb_to_blades(const ExactEFB& x);

/// Inverse change of basis. Each blade is expanded letter by letter through
/// g_{2i-1} = p_i + q_i, g_{2i} = p_i - q_i, normal ordered, and every slot
/// left empty is filled with the identity block q_i p_i + p_i q_i.
/// Throws std::invalid_argument unless x lives over the interleaved Cl(m,m).
ExactEFB blades_to_efb(const Multivector& x, unsigned m);

/// (right, left) eigenvalues of omega on the element, from omega Psi and
/// Psi omega evaluated in blades. Throws std::logic_error if Psi is not an
/// eigenvector.
std::pair<SignBit, SignBit> omega_eigen_check(const EFBElement& e);

}  // namespace clbits
