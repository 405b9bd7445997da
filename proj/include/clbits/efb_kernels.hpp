#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "clbits/efb.hpp"
#include "clbits/op_counts.hpp"

namespace clbits {

/// Element of Cl(m,m) in EFB coordinates: a dense 2^m x 2^m row-major array,
/// xi_ab at (row a, col b). Scalar is any commutative ring type with
/// value-initialized zero, +=, -= and *.
template <class Scalar>
class EFBMultivector {
 public:
  explicit EFBMultivector(unsigned m) : m_(m) {
    EFBIndex::make(0, 0, m);
    coeffs_.resize(static_cast<std::size_t>(dim()) * dim());
  }

  unsigned m() const { return m_; }
  std::uint32_t dim() const { return std::uint32_t{1} << m_; }

  Scalar& at(std::uint32_t row, std::uint32_t col) { return coeffs_[offset(row, col)]; }
  const Scalar& at(std::uint32_t row, std::uint32_t col) const { return coeffs_[offset(row, col)]; }

  std::span<const Scalar> data() const { return coeffs_; }
  std::span<Scalar> data() { return coeffs_; }

  friend bool operator==(const EFBMultivector& x, const EFBMultivector& y) {
    return x.m_ == y.m_ && x.coeffs_ == y.coeffs_;
  }

 private:
  std::size_t offset(std::uint32_t row, std::uint32_t col) const {
    if (row >= dim() || col >= dim()) throw std::out_of_range("EFB coefficient index out of range");
    return static_cast<std::size_t>(row) * dim() + col;
  }

  unsigned m_;
  std::vector<Scalar> coeffs_;
};

namespace detail {

template <class Scalar>
void require_same_slots(const EFBMultivector<Scalar>& x, const EFBMultivector<Scalar>& y) {
  if (x.m() != y.m())
    throw std::invalid_argument("EFB dimension mismatch: m = " + std::to_string(x.m()) + " vs " + std::to_string(y.m()));
}

/// Row a of rho_ad = sum_b s(a,b,d) xi_ab zeta_bd, summing over b in
/// increasing order for every d.
template <class Scalar>
OpCounts efb_product_row(const EFBMultivector<Scalar>& x, const EFBMultivector<Scalar>& y, std::uint32_t a,
                         EFBMultivector<Scalar>& out) {
  const unsigned m = x.m();
  const std::uint32_t dim = x.dim();
  const Scalar zero{};
  OpCounts counts;
  for (std::uint32_t b = 0; b < dim; ++b) {
    const Scalar& xi = x.at(a, b);
    if (xi == zero) continue;
    const std::uint32_t mask = sign_mask(a ^ b, m);
    for (std::uint32_t d = 0; d < dim; ++d) {
      const Scalar& zeta = y.at(b, d);
      if (zeta == zero) continue;
      const bool negative = __builtin_popcount((b ^ d) & mask) & 1;
      if (negative)
        out.at(a, d) -= xi * zeta;
      else
        out.at(a, d) += xi * zeta;
      ++counts.multiplies;
      ++counts.sign_evaluations;
    }
  }
  return counts;
}

}  // namespace detail

/// Reference EFB product, single-threaded.
template <class Scalar>
EFBMultivector<Scalar> efb_product_serial(const EFBMultivector<Scalar>& x, const EFBMultivector<Scalar>& y,
                                          OpCounts* counts = nullptr) {
  detail::require_same_slots(x, y);
  EFBMultivector<Scalar> out(x.m());
  OpCounts total;
  for (std::uint32_t a = 0; a < x.dim(); ++a) total += detail::efb_product_row(x, y, a, out);
  if (counts) *counts += total;
  return out;
}

/// EFB product with rows distributed over OpenMP threads. Each output entry
/// is accumulated in the same order as efb_product_serial, so results are
/// bit-identical to it for any scalar type.
template <class Scalar>
EFBMultivector<Scalar> efb_product_parallel(const EFBMultivector<Scalar>& x, const EFBMultivector<Scalar>& y,
                                            OpCounts* counts = nullptr) {
  detail::require_same_slots(x, y);
  EFBMultivector<Scalar> out(x.m());
  const auto dim = static_cast<std::int64_t>(x.dim());
  std::uint64_t multiplies = 0;
  std::uint64_t signs = 0;
#pragma omp parallel for schedule(static) reduction(+ : multiplies, signs)
  for (std::int64_t a = 0; a < dim; ++a) {
    const OpCounts c = detail::efb_product_row(x, y, static_cast<std::uint32_t>(a), out);
    multiplies += c.multiplies;
    signs += c.sign_evaluations;
  }
  if (counts) *counts += OpCounts{multiplies, signs};
  return out;
}

/// Dispatches to the parallel kernel once the matrix is large enough to pay
/// for the thread team.
template <class Scalar>
EFBMultivector<Scalar> efb_product(const EFBMultivector<Scalar>& x, const EFBMultivector<Scalar>& y,
                                   OpCounts* counts = nullptr) {
  if (x.m() >= 5) return efb_product_parallel(x, y, counts);
  return efb_product_serial(x, y, counts);
}

}  // namespace clbits
