#include "clbits/efb_convert.hpp"

#include <array>
#include <mutex>
#include <stdexcept>

#include "clbits/blade_oracle.hpp"
#include "clbits/null_word.hpp"

namespace clbits {

std::shared_ptr<const Metric> neutral_metric(unsigned m) {
  EFBIndex::make(0, 0, m);
  static std::mutex mutex;
  static std::array<std::shared_ptr<const Metric>, kMaxSlots + 1> cache;
  std::lock_guard lock(mutex);
  if (!cache[m]) cache[m] = std::make_shared<const Metric>(Metric::interleaved(m));
  return cache[m];
}

WittBasis witt_basis(unsigned m) {
  auto metric = neutral_metric(m);
  const DyadicRational half = DyadicRational::from_parts(1, 1);
  WittBasis w;
  for (unsigned i = 1; i <= m; ++i) {
    const Multivector odd = Multivector::generator(metric, 2 * i - 1);
    const Multivector even = Multivector::generator(metric, 2 * i);
    w.p.push_back(mv_scale(odd + even, half));
    w.q.push_back(mv_scale(odd - even, half));
  }
  return w;
}

namespace {

Multivector word_to_blades(const EFBElement& e, const WittBasis& w) {
  Multivector r = Multivector::scalar(neutral_metric(e.index.m), 1);
  for (const NullLetter& l : letters(e)) r = r * (l.is_p ? w.p[l.slot] : w.q[l.slot]);
  return r;
}

}  // namespace

Multivector efb_to_blades(const EFBElement& e) { return word_to_blades(e, witt_basis(e.index.m)); }

Multivector efb_to_blades(const ExactEFB& x) {
  const unsigned m = x.m();
  const WittBasis w = witt_basis(m);
  Multivector r(neutral_metric(m));
  for (std::uint32_t a = 0; a < x.dim(); ++a) {
    for (std::uint32_t b = 0; b < x.dim(); ++b) {
      const DyadicRational& c = x.at(a, b);
      if (c.is_zero()) continue;
      r = r + mv_scale(word_to_blades(efb_element(a, b, m), w), c);
    }
  }
  return r;
}

namespace {

// Adds coeff * (normal word with empty slots replaced by qp + pq) into out.
void deposit(const NormalWord& word, const DyadicRational& coeff, ExactEFB& out) {
  const auto m = static_cast<unsigned>(word.slots.size());
  std::vector<unsigned> empty;
  for (unsigned i = 0; i < m; ++i)
    if (word.slots[i] == SlotWord::Empty) empty.push_back(i);
  const DyadicRational signed_coeff = word.sign.is_negative() ? -coeff : coeff;
  NormalWord filled = word;
  for (std::uint32_t choice = 0; choice < (std::uint32_t{1} << empty.size()); ++choice) {
    for (unsigned j = 0; j < empty.size(); ++j) filled.slots[empty[j]] = (choice >> j) & 1U ? SlotWord::PQ : SlotWord::QP;
    const EFBIndex idx = index_of(filled);
    out.at(idx.row, idx.col) += signed_coeff;
  }
}

}  // namespace

ExactEFB blades_to_efb(const Multivector& x, unsigned m) {
  if (!(x.metric() == *neutral_metric(m)))
    throw std::invalid_argument("blades_to_efb needs the interleaved Cl(" + std::to_string(m) + "," +
                                std::to_string(m) + ") metric, got " + x.metric().describe());
  ExactEFB out(m);
  std::vector<NullLetter> word;
  for (const auto& [mask, coeff] : x.terms()) {
    std::vector<unsigned> gens;  // 0-based generator indices, increasing
    for (unsigned i = 0; i < 2 * m; ++i)
      if ((mask >> i) & 1U) gens.push_back(i);
    // choice bit j: 0 picks p, 1 picks q for generator gens[j]
    for (std::uint64_t choice = 0; choice < (std::uint64_t{1} << gens.size()); ++choice) {
      word.clear();
      bool negative = false;
      for (unsigned j = 0; j < gens.size(); ++j) {
        const bool pick_q = (choice >> j) & 1U;
        word.push_back({gens[j] / 2, !pick_q});
        // g_{2i} = p_i - q_i: the q term of an even-position generator is negative
        if (pick_q && gens[j] % 2 == 1) negative = !negative;
      }
      const auto normal = normal_order(word, m);
      if (!normal) continue;
      deposit(*normal, negative ? -coeff : coeff, out);
    }
  }
  return out;
}

std::pair<SignBit, SignBit> omega_eigen_check(const EFBElement& e) {
  auto metric = neutral_metric(e.index.m);
  const Multivector psi = efb_to_blades(e);
  const Multivector omega = Multivector::blade(metric, volume_element(*metric));
  const auto eigenvalue = [&](const Multivector& product) {
    if (product == psi) return SignBit::plus();
    if (product == mv_scale(psi, -1)) return SignBit::minus();
    throw std::logic_error("EFB element " + e.to_string() + " is not an eigenvector of omega");
  };
  return {eigenvalue(omega * psi), eigenvalue(psi * omega)};
}

}  // namespace clbits
