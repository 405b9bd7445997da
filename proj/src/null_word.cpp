#include "clbits/null_word.hpp"

#include <stdexcept>

namespace clbits {

std::vector<NullLetter> letters(const EFBElement& e) {
  std::vector<NullLetter> out;
  out.reserve(2 * e.word.size());
  for (unsigned i = 0; i < e.word.size(); ++i) {
    switch (e.word[i]) {
      case Slot::QP: out.push_back({i, false}); out.push_back({i, true}); break;
      case Slot::PQ: out.push_back({i, true}); out.push_back({i, false}); break;
      case Slot::Q: out.push_back({i, false}); break;
      case Slot::P: out.push_back({i, true}); break;
    }
  }
  return out;
}

std::optional<NormalWord> normal_order(std::span<const NullLetter> word, unsigned m) {
  for (const NullLetter& l : word)
    if (l.slot >= m) throw std::invalid_argument("null letter slot out of range");
  std::vector<NullLetter> sorted(word.begin(), word.end());
  unsigned swaps = 0;
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    for (std::size_t j = i; j > 0 && sorted[j - 1].slot > sorted[j].slot; --j) {
      std::swap(sorted[j - 1], sorted[j]);
      ++swaps;
    }
  }

  NormalWord out{SignBit::from_bit(swaps & 1U), std::vector<SlotWord>(m, SlotWord::Empty)};
  std::size_t i = 0;
  while (i < sorted.size()) {
    const unsigned slot = sorted[i].slot;
    std::size_t j = i;
    while (j < sorted.size() && sorted[j].slot == slot) {
      if (j > i && sorted[j].is_p == sorted[j - 1].is_p) return std::nullopt;  // pp or qq
      ++j;
    }
    const bool first_p = sorted[i].is_p;
    const bool odd = (j - i) % 2 == 1;
    if (first_p)
      out.slots[slot] = odd ? SlotWord::P : SlotWord::PQ;
    else
      out.slots[slot] = odd ? SlotWord::Q : SlotWord::QP;
    i = j;
  }
  return out;
}

EFBIndex index_of(const NormalWord& w) {
  const auto m = static_cast<unsigned>(w.slots.size());
  std::uint32_t row = 0;
  std::uint32_t parity = 0;
  for (unsigned i = 0; i < m; ++i) {
    const std::uint32_t bit = std::uint32_t{1} << (m - 1 - i);
    switch (w.slots[i]) {
      case SlotWord::Empty: throw std::invalid_argument("normal word has an empty slot");
      case SlotWord::QP: break;
      case SlotWord::PQ: row |= bit; break;
      case SlotWord::Q: parity |= bit; break;
      case SlotWord::P: row |= bit; parity |= bit; break;
    }
  }
  return EFBIndex::make(row, row ^ parity, m);
}

}  // namespace clbits
