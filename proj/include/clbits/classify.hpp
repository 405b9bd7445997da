#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>

#include "clbits/binary.hpp"

namespace clbits {

/// Signature (k, l) of R^{k,l} with its derived n = k + l and nu = k - l.
struct SignatureKL {
  unsigned k = 0;
  unsigned l = 0;

  unsigned n() const { return k + l; }
  std::int64_t nu() const { return static_cast<std::int64_t>(k) - static_cast<std::int64_t>(l); }
  int n_mod8() const { return static_cast<int>(n() % 8); }
  int nu_mod8() const { return mod8(nu()); }
  bool n_even() const { return n() % 2 == 0; }
};

enum class DivisionAlgebra : std::uint8_t { R, C, H };

/// Base ring of the Wedderburn decomposition: a division algebra, possibly doubled (R+R, H+H).
struct BaseAlgebra {
  DivisionAlgebra division = DivisionAlgebra::R;
  bool doubled = false;

  /// Real dimension of one copy of the division algebra.
  unsigned real_dimension() const { return division == DivisionAlgebra::R ? 1 : division == DivisionAlgebra::C ? 2 : 4; }
  /// "R", "C", "H", "2R", "2H".
  std::string name() const;
  /// Unicode "R⊕R" style, or ASCII "R+R".
  std::string pretty(bool ascii) const;

  friend bool operator==(BaseAlgebra, BaseAlgebra) = default;
};

/// Base from nu mod 8: [R, R+R, R, C, H, H+H, H, C].
BaseAlgebra division_algebra(std::int64_t nu);

/// Automorphism-group bits (a, b, c) = ((omega tau)^2, tau^2, omega^2).
struct AutomorphismBits {
  SignBit a;
  SignBit b;
  SignBit c;

  friend bool operator==(AutomorphismBits, AutomorphismBits) = default;
};

struct AlgebraClass {
  SignatureKL signature;
  BaseAlgebra base;
  std::uint64_t matrix_size = 1;
  bool is_central = false;
  bool is_simple = false;
  SignBit omega_sq;
  std::array<unsigned, 3> cube{};  // (nu_0, nu_1, nu_2)
  std::optional<SignBit> tau_sq;         // n even only
  std::optional<SignBit> omega_tau_sq;   // n even only

  /// "R(4)", "2H(2)", "C" ... in the notation of the periodicity table.
  std::string table_name() const;
  /// Checks matrix_size^2 * dim(base) * (2 if doubled) = 2^n.
  bool dimension_identity_holds() const;
};

/// Full classification of Cl(k, l). Matrix size comes from the dimension
/// identity, so the result extends past n = 7 by periodicity.
AlgebraClass classify(unsigned k, unsigned l);

/// Bits (nu_0, nu_1, nu_2) of nu mod 8.
std::array<unsigned, 3> cube_coordinates(std::int64_t nu);

/// Closed forms.
/// omega^2 = (-1)^((k-l)(k-l-1)/2).
SignBit omega_squared(unsigned k, unsigned l);
/// tau^2 = (-1)^(l(l-1)/2) for k, l even, (-1)^(k(k-1)/2) for k, l odd.
/// Throws std::domain_error for odd n.
SignBit tau_squared(unsigned k, unsigned l);
/// (omega tau)^2 = omega^2 tau^2 for k, l even, -omega^2 tau^2 for k, l odd.
/// Throws std::domain_error for odd n.
SignBit omega_tau_squared(unsigned k, unsigned l);

/// n mod 8 for even n from nu mod 8 and the two tau squares:
///   _2n = _2nu tau^2, _1n = (omega tau)^2 tau^2, _0n = +1.
/// Throws std::domain_error for odd nu.
int recover_n_bits(std::int64_t nu, SignBit tau_sq, SignBit omega_tau_sq);

/// (a, b, c) from the closed forms. Throws std::domain_error for odd n.
AutomorphismBits varlamov_bits(unsigned k, unsigned l);

struct PartialSignature {
  int n_mod8 = 0;
  int nu_mod8 = 0;
  int k_mod4 = 0;
  int l_mod4 = 0;

  friend bool operator==(PartialSignature, PartialSignature) = default;
};

/// Inverts the classification for even n: nu from the cube (nu_0 = 0 since
/// the algebra is central, nu_1 from omega^2 = c, nu_2 from R or H), n from
/// recover_n_bits, and (k, l) from (n + nu)/2 and (n - nu)/2, which n and nu
/// mod 8 fix only modulo 4. Throws std::invalid_argument when the inputs
/// cannot come from an even-dimensional real Clifford algebra.
PartialSignature recover_signature_partial(bool is_central, BaseAlgebra base, AutomorphismBits bits);

}  // namespace clbits
