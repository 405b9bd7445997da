#pragma once

#include <optional>
#include <span>
#include <vector>

#include "clbits/binary.hpp"
#include "clbits/efb.hpp"

namespace clbits {

/// One Witt-basis letter p_i or q_i (slot 0-based).
struct NullLetter {
  unsigned slot = 0;
  bool is_p = false;

  friend bool operator==(NullLetter, NullLetter) = default;
};

/// Reduced content of one slot after normal ordering; Empty means no letter
/// of that slot survived (or none was present).
enum class SlotWord : std::uint8_t { Empty, QP, PQ, Q, P };

struct NormalWord {
  SignBit sign;
  std::vector<SlotWord> slots;
};

/// Letters of a canonical EFB word, slot by slot.
std::vector<NullLetter> letters(const EFBElement& e);

/// Brings an arbitrary product of null letters into slot order.
///
/// Letters of distinct slots anticommute, so a stable sort by slot flips the
/// sign once per transposition. Within a slot pp = qq = 0 and, from
/// {p, q} = 1, pqp = p and qpq = q, so every surviving string collapses to
/// p, q, pq or qp. Returns nullopt when the word vanishes.
std::optional<NormalWord> normal_order(std::span<const NullLetter> word, unsigned m);

/// The EFB element a fully populated normal word equals (every slot non-Empty).
EFBIndex index_of(const NormalWord& w);

}  // namespace clbits
