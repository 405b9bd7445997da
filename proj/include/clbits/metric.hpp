#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "clbits/binary.hpp"

namespace clbits {

/// Maximum number of generators a Blade mask can address.
inline constexpr unsigned kMaxGenerators = 64;

/// Diagonal metric: the square of every generator.
///
/// Two layouts are used and never mixed. The block layout puts the k positive
/// generators first; the interleaved layout of Cl(m,m) alternates +1 (odd
/// positions, 1-based) and -1 (even positions).
class Metric {
 public:
  explicit Metric(std::vector<SignBit> squares);

  static Metric block(unsigned k, unsigned l);
  static Metric interleaved(unsigned m);

  unsigned dimension() const { return static_cast<unsigned>(squares_.size()); }
  unsigned positive() const { return dimension() - negative(); }
  unsigned negative() const;
  std::int64_t nu() const { return static_cast<std::int64_t>(positive()) - negative(); }

  /// Square of generator i, 0-based.
  SignBit square(unsigned i) const { return squares_.at(i); }
  const std::vector<SignBit>& squares() const { return squares_; }
  /// Bit i set iff generator i squares to -1.
  std::uint64_t negative_mask() const { return negative_mask_; }
  /// All generator bits.
  std::uint64_t full_mask() const;

  std::string describe() const;

  friend bool operator==(const Metric& a, const Metric& b) { return a.squares_ == b.squares_; }

 private:
  std::vector<SignBit> squares_;
  std::uint64_t negative_mask_ = 0;
};

/// Basis monomial: bit i set means generator i+1 is present, product taken in
/// increasing index order.
struct Blade {
  std::uint64_t mask = 0;

  constexpr unsigned grade() const { return static_cast<unsigned>(__builtin_popcountll(mask)); }
  friend constexpr bool operator==(Blade, Blade) = default;
  friend constexpr auto operator<=>(Blade, Blade) = default;
};

/// Sign of reordering a*b into increasing generator order (no metric factor).
inline SignBit reorder_sign(std::uint64_t a, std::uint64_t b) {
  // For each generator of b, count the generators of a with a higher index.
  unsigned swaps = 0;
  std::uint64_t rest = b;
  while (rest != 0) {
    const unsigned i = static_cast<unsigned>(__builtin_ctzll(rest));
    rest &= rest - 1;
    const std::uint64_t above = i >= 63 ? 0 : (a >> (i + 1));
    swaps += static_cast<unsigned>(__builtin_popcountll(above));
  }
  return SignBit::from_bit(swaps & 1U);
}

/// a*b = sign * (a XOR b). Throws std::invalid_argument if either mask
/// names a generator outside the metric.
std::pair<SignBit, Blade> blade_product(Blade a, Blade b, const Metric& metric);

/// Unchecked variant for inner loops; masks must already fit the metric.
inline SignBit blade_product_sign(std::uint64_t a, std::uint64_t b, std::uint64_t negative_mask) {
  const auto contracted = static_cast<unsigned>(__builtin_popcountll(a & b & negative_mask));
  return reorder_sign(a, b) * SignBit::from_bit(contracted & 1U);
}

}  // namespace clbits
