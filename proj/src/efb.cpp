#include "clbits/efb.hpp"

#include <stdexcept>

namespace clbits {

EFBIndex EFBIndex::make(std::uint32_t row, std::uint32_t col, unsigned m) {
  if (m == 0 || m > kMaxSlots) throw std::invalid_argument("EFB slot count must be in [1, 8], got " + std::to_string(m));
  const std::uint32_t dim = std::uint32_t{1} << m;
  if (row >= dim || col >= dim)
    throw std::invalid_argument("EFB index (" + std::to_string(row) + ", " + std::to_string(col) +
                                ") out of range for m = " + std::to_string(m));
  return EFBIndex{row, col, m};
}

EFBElement efb_element(std::uint32_t row, std::uint32_t col, unsigned m) {
  EFBElement e{EFBIndex::make(row, col, m), {}};
  e.word.reserve(m);
  for (unsigned i = 0; i < m; ++i) {
    const bool h_negative = EFBIndex::slot_bit(row, i, m) != 0;
    const bool odd = EFBIndex::slot_bit(row ^ col, i, m) != 0;
    if (h_negative)
      e.word.push_back(odd ? Slot::P : Slot::PQ);
    else
      e.word.push_back(odd ? Slot::Q : Slot::QP);
  }
  return e;
}

std::string EFBElement::to_string() const {
  std::string out;
  for (unsigned i = 0; i < word.size(); ++i) {
    if (i) out += ' ';
    const std::string n = std::to_string(i + 1);
    switch (word[i]) {
      case Slot::QP: out += "q" + n + "p" + n; break;
      case Slot::PQ: out += "p" + n + "q" + n; break;
      case Slot::Q: out += "q" + n; break;
      case Slot::P: out += "p" + n; break;
    }
  }
  return out;
}

Signatures signatures(const EFBElement& e) {
  Signatures s;
  s.h.reserve(e.word.size());
  s.g.reserve(e.word.size());
  for (Slot slot : e.word) {
    // h: first null vector q -> +1, p -> -1; g: two letters even, one odd
    const bool starts_with_p = slot == Slot::PQ || slot == Slot::P;
    const bool odd = slot == Slot::P || slot == Slot::Q;
    s.h.push_back(starts_with_p ? SignBit::minus() : SignBit::plus());
    s.g.push_back(odd ? SignBit::minus() : SignBit::plus());
    s.chirality.h_hat *= s.h.back();
    s.chirality.g_hat *= s.g.back();
  }
  return s;
}

SignBit matrix_unit_sign(std::uint32_t a, std::uint32_t b, unsigned m) {
  EFBIndex::make(a, b, m);
  // n(a,0) = s(0,a,0) makes E_0a E_a0 = E_00; then n(a,b) = n(a,0) s(a,0,b).
  return sign_s(0, a, 0, m) * sign_s(a, 0, b, m);
}

std::vector<SignBit> matrix_unit_normalization(unsigned m) {
  EFBIndex::make(0, 0, m);
  const std::uint32_t dim = std::uint32_t{1} << m;
  std::vector<SignBit> n(static_cast<std::size_t>(dim) * dim);
  for (std::uint32_t a = 0; a < dim; ++a)
    for (std::uint32_t b = 0; b < dim; ++b) n[static_cast<std::size_t>(a) * dim + b] = matrix_unit_sign(a, b, m);
  return n;
}

std::string signature_label(std::uint32_t signature, unsigned m, bool ascii) {
  std::string s;
  for (unsigned i = 0; i < m; ++i) {
    if (EFBIndex::slot_bit(signature, i, m))
      s += ascii ? "-" : "−";
    else
      s += '+';
  }
  return s;
}

}  // namespace clbits
