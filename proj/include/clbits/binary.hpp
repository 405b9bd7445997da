#pragma once

#include <cstdint>
#include <ostream>

namespace clbits {

/// A sign in {+1, -1}, stored as its bit b with sign = 1 - 2b.
class SignBit {
 public:
  constexpr SignBit() = default;

  static constexpr SignBit plus() { return SignBit{0}; }
  static constexpr SignBit minus() { return SignBit{1}; }
  static constexpr SignBit from_bit(unsigned b) { return SignBit{static_cast<std::uint8_t>(b & 1U)}; }
  /// Throws std::invalid_argument unless v is +1 or -1.
  static SignBit from_int(int v);

  constexpr unsigned bit() const { return bit_; }
  constexpr int value() const { return 1 - 2 * static_cast<int>(bit_); }
  constexpr bool is_negative() const { return bit_ != 0; }

  constexpr SignBit operator-() const { return SignBit{static_cast<std::uint8_t>(bit_ ^ 1U)}; }
  friend constexpr SignBit operator*(SignBit a, SignBit b) {
    return SignBit{static_cast<std::uint8_t>(a.bit_ ^ b.bit_)};
  }
  constexpr SignBit& operator*=(SignBit o) {
    bit_ ^= o.bit_;
    return *this;
  }
  friend constexpr bool operator==(SignBit, SignBit) = default;

 private:
  constexpr explicit SignBit(std::uint8_t b) : bit_(b) {}
  std::uint8_t bit_ = 0;
};

std::ostream& operator<<(std::ostream& os, SignBit s);

/// i-th binary digit of n. Throws std::invalid_argument for n < 0.
unsigned bit(std::int64_t n, unsigned i);

/// (-1)^floor(n / 2^i), i.e. 1 - 2 * bit(n, i).
SignBit sign_bit(std::int64_t n, unsigned i);

/// (-1)^C(n, 2^i) with the binomial evaluated exactly in arbitrary precision.
/// Agrees with sign_bit(n, i) by Lucas' theorem; kept as an independent route.
SignBit lucas_sign(std::int64_t n, unsigned i);

/// (-1)^(n(n-1)/2), evaluated from the exponent itself.
SignBit half_pochhammer_sign(std::int64_t n);

/// (-n) mod 8 in [0, 8).
int neg_mod8(std::int64_t n);

/// n mod 8 in [0, 8); negative inputs are reduced through neg_mod8(-n).
int mod8(std::int64_t n);

}  // namespace clbits
