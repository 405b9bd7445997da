#include "clbits/classify.hpp"

#include <gmpxx.h>

#include <stdexcept>

namespace clbits {

namespace {

constexpr std::array<BaseAlgebra, 8> kBaseByNu = {{
    {DivisionAlgebra::R, false},
    {DivisionAlgebra::R, true},
    {DivisionAlgebra::R, false},
    {DivisionAlgebra::C, false},
    {DivisionAlgebra::H, false},
    {DivisionAlgebra::H, true},
    {DivisionAlgebra::H, false},
    {DivisionAlgebra::C, false},
}};

void require_even(unsigned k, unsigned l) {
  if ((k + l) % 2 != 0) throw std::domain_error("tau undefined for odd n in this artifact");
}

SignBit parity_sign(const mpz_class& e) { return SignBit::from_bit(mpz_odd_p(e.get_mpz_t()) ? 1U : 0U); }

}  // namespace

std::string BaseAlgebra::name() const {
  const char* d = division == DivisionAlgebra::R ? "R" : division == DivisionAlgebra::C ? "C" : "H";
  return doubled ? std::string("2") + d : std::string(d);
}

std::string BaseAlgebra::pretty(bool ascii) const {
  const std::string d = division == DivisionAlgebra::R ? "R" : division == DivisionAlgebra::C ? "C" : "H";
  if (!doubled) return d;
  return d + (ascii ? "+" : "⊕") + d;
}

BaseAlgebra division_algebra(std::int64_t nu) { return kBaseByNu[static_cast<std::size_t>(mod8(nu))]; }

std::array<unsigned, 3> cube_coordinates(std::int64_t nu) {
  const int v = mod8(nu);
  return {bit(v, 0), bit(v, 1), bit(v, 2)};
}

std::string AlgebraClass::table_name() const {
  std::string s = base.name();
  if (matrix_size != 1) s += "(" + std::to_string(matrix_size) + ")";
  return s;
}

bool AlgebraClass::dimension_identity_holds() const {
  mpz_class lhs = mpz_class(static_cast<unsigned long>(matrix_size)) * static_cast<unsigned long>(matrix_size) *
                  base.real_dimension() * (base.doubled ? 2 : 1);
  mpz_class rhs;
  mpz_ui_pow_ui(rhs.get_mpz_t(), 2, signature.n());
  return lhs == rhs;
}

SignBit omega_squared(unsigned k, unsigned l) {
  const mpz_class nu = mpz_class(k) - l;
  return parity_sign(nu * (nu - 1) / 2);
}

SignBit tau_squared(unsigned k, unsigned l) {
  require_even(k, l);
  const mpz_class x = k % 2 == 0 ? mpz_class(l) : mpz_class(k);
  return parity_sign(x * (x - 1) / 2);
}

SignBit omega_tau_squared(unsigned k, unsigned l) {
  require_even(k, l);
  const SignBit even_case = omega_squared(k, l) * tau_squared(k, l);
  return k % 2 == 0 ? even_case : -even_case;
}

int recover_n_bits(std::int64_t nu, SignBit tau_sq, SignBit omega_tau_sq) {
  const int nu8 = mod8(nu);
  if (nu8 % 2 != 0) throw std::domain_error("n mod 8 recovery covers even n only (nu must be even)");
  const SignBit n2 = sign_bit(nu8, 2) * tau_sq;
  const SignBit n1 = omega_tau_sq * tau_sq;
  return static_cast<int>(4 * n2.bit() + 2 * n1.bit());
}

AutomorphismBits varlamov_bits(unsigned k, unsigned l) {
  require_even(k, l);
  return {omega_tau_squared(k, l), tau_squared(k, l), omega_squared(k, l)};
}

AlgebraClass classify(unsigned k, unsigned l) {
  AlgebraClass c;
  c.signature = {k, l};
  const std::int64_t nu = c.signature.nu();
  const unsigned n = c.signature.n();
  c.base = division_algebra(nu);
  c.cube = cube_coordinates(nu);
  c.omega_sq = sign_bit(c.signature.nu_mod8(), 1);
  c.is_central = n % 2 == 0;
  // odd n: omega central; omega^2 = -1 makes the center C (simple), +1 doubles the algebra
  c.is_simple = c.is_central || c.omega_sq.is_negative();

  const unsigned base_log2 = (c.base.division == DivisionAlgebra::R ? 0 : c.base.division == DivisionAlgebra::C ? 1 : 2) +
                             (c.base.doubled ? 1 : 0);
  if (n < base_log2 || (n - base_log2) % 2 != 0 || (n - base_log2) / 2 >= 64)
    throw std::logic_error("dimension identity has no integral matrix size for Cl(" + std::to_string(k) + "," +
                           std::to_string(l) + ")");
  c.matrix_size = std::uint64_t{1} << ((n - base_log2) / 2);

  if (c.is_central) {
    c.tau_sq = tau_squared(k, l);
    c.omega_tau_sq = omega_tau_squared(k, l);
  }
  return c;
}

PartialSignature recover_signature_partial(bool is_central, BaseAlgebra base, AutomorphismBits bits) {
  if (!is_central) throw std::invalid_argument("signature recovery covers central (even n) algebras only");
  if (base.doubled || base.division == DivisionAlgebra::C)
    throw std::invalid_argument("base " + base.name() + " cannot occur for even n (nu_0 = 0 face holds R and H only)");
  PartialSignature out;
  const int nu1 = static_cast<int>(bits.c.bit());
  const int nu2 = base.division == DivisionAlgebra::H ? 1 : 0;
  out.nu_mod8 = 2 * nu1 + 4 * nu2;
  out.n_mod8 = recover_n_bits(out.nu_mod8, bits.b, bits.a);
  out.k_mod4 = ((out.n_mod8 + out.nu_mod8) / 2) % 4;
  out.l_mod4 = ((((out.n_mod8 - out.nu_mod8) % 16) + 16) % 16 / 2) % 4;
  return out;
}

}  // namespace clbits
