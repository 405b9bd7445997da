#include "clbits/blade_oracle.hpp"

#include <memory>
#include <stdexcept>

namespace clbits {

namespace {

void require_even(unsigned k, unsigned l) {
  if ((k + l) % 2 != 0) throw std::domain_error("tau undefined for odd n in this artifact");
}

std::uint64_t range_mask(unsigned first, unsigned count) {
  if (count == 0) return 0;
  const std::uint64_t ones = count >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << count) - 1;
  return ones << first;
}

SignBit blade_square(Blade b, const Metric& metric) {
  const auto [s, r] = blade_product(b, b, metric);
  if (r.mask != 0) throw std::logic_error("blade square is not scalar");
  return s;
}

/// B g B^-1 for a blade B with B^2 = +-1; B^-1 = B^2 * B.
Multivector conjugate(const Multivector& b, const Multivector& g, SignBit b_square) {
  const Multivector inverse = mv_scale(b, b_square.value());
  return b * g * inverse;
}

}  // namespace

Blade volume_element(const Metric& metric) { return Blade{metric.full_mask()}; }

SignBit omega_squared_oracle(const Metric& metric) { return blade_square(volume_element(metric), metric); }

bool center_check(const Metric& metric) {
  // n = 0: omega is the scalar 1 and adds nothing to the center
  if (metric.dimension() == 0) return false;
  auto m = std::make_shared<const Metric>(metric);
  const Multivector omega = Multivector::blade(m, volume_element(metric));
  for (unsigned i = 1; i <= metric.dimension(); ++i) {
    const Multivector g = Multivector::generator(m, i);
    if (!(omega * g - g * omega).is_zero()) return false;
  }
  return true;
}

Blade tau_blade(unsigned k, unsigned l) {
  require_even(k, l);
  if (k % 2 == 0) return Blade{range_mask(k, l)};
  return Blade{range_mask(0, k)};
}

SignBit tau_squared_oracle(unsigned k, unsigned l) {
  return blade_square(tau_blade(k, l), Metric::block(k, l));
}

SignBit omega_tau_squared_oracle(unsigned k, unsigned l) {
  const Metric metric = Metric::block(k, l);
  const auto [s, wt] = blade_product(volume_element(metric), tau_blade(k, l), metric);
  return s * s * blade_square(wt, metric);
}

InvolutionCheck check_inner_involutions(unsigned k, unsigned l) {
  require_even(k, l);
  auto m = std::make_shared<const Metric>(Metric::block(k, l));
  const Multivector omega = Multivector::blade(m, volume_element(*m));
  const Multivector tau = Multivector::blade(m, tau_blade(k, l));
  const Multivector omega_tau = omega * tau;
  const SignBit w2 = omega_squared_oracle(*m);
  const SignBit t2 = tau_squared_oracle(k, l);
  const SignBit wt2 = omega_tau_squared_oracle(k, l);

  InvolutionCheck out{true, true, true};
  for (unsigned i = 1; i <= m->dimension(); ++i) {
    const Multivector g = Multivector::generator(m, i);
    const Multivector g_inverse = mv_scale(g, m->square(i - 1).value());
    const Multivector neg_g = mv_scale(g, -1);
    out.omega_negates = out.omega_negates && conjugate(omega, g, w2) == neg_g;
    out.tau_dualizes = out.tau_dualizes && conjugate(tau, g, t2) == g_inverse;
    out.omega_tau_antidualizes =
        out.omega_tau_antidualizes && conjugate(omega_tau, g, wt2) == mv_scale(g_inverse, -1);
  }
  return out;
}

}  // namespace clbits
