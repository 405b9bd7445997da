#include "clbits/metric.hpp"

#include <stdexcept>

namespace clbits {

Metric::Metric(std::vector<SignBit> squares) : squares_(std::move(squares)) {
  if (squares_.size() > kMaxGenerators)
    throw std::invalid_argument("metric supports at most 64 generators, got " + std::to_string(squares_.size()));
  for (unsigned i = 0; i < squares_.size(); ++i)
    if (squares_[i].is_negative()) negative_mask_ |= std::uint64_t{1} << i;
}

Metric Metric::block(unsigned k, unsigned l) {
  std::vector<SignBit> sq(k, SignBit::plus());
  sq.insert(sq.end(), l, SignBit::minus());
  return Metric(std::move(sq));
}

Metric Metric::interleaved(unsigned m) {
  std::vector<SignBit> sq;
  sq.reserve(2 * m);
  for (unsigned i = 0; i < m; ++i) {
    sq.push_back(SignBit::plus());
    sq.push_back(SignBit::minus());
  }
  return Metric(std::move(sq));
}

unsigned Metric::negative() const { return static_cast<unsigned>(__builtin_popcountll(negative_mask_)); }

std::uint64_t Metric::full_mask() const {
  const unsigned n = dimension();
  return n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

std::string Metric::describe() const {
  std::string s = "Cl(" + std::to_string(positive()) + "," + std::to_string(negative()) + ")[";
  for (auto q : squares_) s += q.is_negative() ? '-' : '+';
  return s + "]";
}

std::pair<SignBit, Blade> blade_product(Blade a, Blade b, const Metric& metric) {
  const std::uint64_t full = metric.full_mask();
  if ((a.mask & ~full) != 0 || (b.mask & ~full) != 0)
    throw std::invalid_argument("blade does not fit metric " + metric.describe());
  return {blade_product_sign(a.mask, b.mask, metric.negative_mask()), Blade{a.mask ^ b.mask}};
}

}  // namespace clbits
