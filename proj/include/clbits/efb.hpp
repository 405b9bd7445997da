#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "clbits/binary.hpp"

namespace clbits {

/// Largest slot count the dense EFB engine accepts (256 x 256 coefficients).
inline constexpr unsigned kMaxSlots = 8;

/// Content of one slot psi_i of an EFB word.
enum class Slot : std::uint8_t { QP, PQ, Q, P };

/// Address of an EFB element Psi_ab in Cl(m,m).
///
/// row is the h signature and col the h o g signature, one bit per slot with
/// slot 1 in the most significant position; bit 0 means +1, bit 1 means -1.
struct EFBIndex {
  std::uint32_t row = 0;
  std::uint32_t col = 0;
  unsigned m = 1;

  /// Throws std::invalid_argument unless 1 <= m <= kMaxSlots and row, col < 2^m.
  static EFBIndex make(std::uint32_t row, std::uint32_t col, unsigned m);

  /// Bit of slot i (0-based, i = 0 is slot 1) in a signature integer.
  static unsigned slot_bit(std::uint32_t signature, unsigned i, unsigned m) { return (signature >> (m - 1 - i)) & 1U; }

  /// Odd slots of the element: g = h * (h o g), i.e. row XOR col.
  std::uint32_t parity_mask() const { return row ^ col; }

  friend bool operator==(EFBIndex, EFBIndex) = default;
};

/// Chirality h^ (eigenvalue of omega on the left) and global parity g^.
struct ChiralityRecord {
  SignBit h_hat;
  SignBit g_hat;
};

/// Canonical EFB word psi_1 ... psi_m (no sign prefix).
struct EFBElement {
  EFBIndex index;
  std::vector<Slot> word;

  /// "q1p1 q2p2" style: slot letters joined, slots separated by spaces.
  std::string to_string() const;
};

/// Builds the canonical word for (row, col). h_i = +1 starts the slot with q,
/// h_i = -1 with p; g_i = +1 gives two letters, g_i = -1 one letter.
EFBElement efb_element(std::uint32_t row, std::uint32_t col, unsigned m);

struct Signatures {
  std::vector<SignBit> h;
  std::vector<SignBit> g;
  ChiralityRecord chirality;
};

/// h and g read off the slot contents of the word.
Signatures signatures(const EFBElement& e);

/// Sign in Psi_ab Psi_bd = s(a, b, d) Psi_ad.
///
/// Each slot product psi_i phi_i reduces to the canonical slot word with a
/// plus sign, so the only sign comes from moving every letter of phi_i left
/// past the letters of psi_{i+1} ... psi_m. The scan runs over slots from
/// last to first, carrying the parity of the left-word letters seen so far.
inline SignBit sign_s(std::uint32_t a, std::uint32_t b, std::uint32_t d, unsigned m) {
  const std::uint32_t left_odd = a ^ b;
  const std::uint32_t right_odd = b ^ d;
  unsigned carried = 0;
  unsigned sign = 0;
  for (unsigned bitpos = 0; bitpos < m; ++bitpos) {  // slot m first
    sign ^= ((right_odd >> bitpos) & 1U) & carried;
    carried ^= (left_odd >> bitpos) & 1U;
  }
  return SignBit::from_bit(sign);
}

/// Precomputed form of sign_s for a fixed left word: bit p is set iff an odd
/// number of the left word's letters sit in slots after the one at bit p.
/// Then s(a, b, d) = (-1)^popcount((b ^ d) & sign_mask(a ^ b, m)).
inline std::uint32_t sign_mask(std::uint32_t left_odd, unsigned m) {
  std::uint32_t mask = 0;
  unsigned carried = 0;
  for (unsigned bitpos = 0; bitpos < m; ++bitpos) {
    mask |= static_cast<std::uint32_t>(carried) << bitpos;
    carried ^= (left_odd >> bitpos) & 1U;
  }
  return mask;
}

/// Signs n(a, b) with E_ab = n(a, b) Psi_ab forming matrix units
/// (E_ab E_cd = delta_bc E_ad). Anchored at row and column 0: n(0, b) = +1,
/// E_0a E_a0 = E_00, and E_ab = E_a0 E_0b. Entry (a, b) is at a * 2^m + b.
std::vector<SignBit> matrix_unit_normalization(unsigned m);

/// Single entry of matrix_unit_normalization without building the table.
SignBit matrix_unit_sign(std::uint32_t a, std::uint32_t b, unsigned m);

/// "++-" style label of a signature integer over m slots.
std::string signature_label(std::uint32_t signature, unsigned m, bool ascii = true);

}  // namespace clbits
