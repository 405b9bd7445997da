#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "clbits/metric.hpp"
#include "clbits/op_counts.hpp"

namespace clbits {

// Dense blade-basis products over all 2^n coefficients, indexed by blade mask.
// These are the baseline the EFB kernels are measured against.

namespace detail {

template <class Scalar>
void require_dense_shape(std::span<const Scalar> x, std::span<const Scalar> y, const Metric& metric) {
  if (metric.dimension() > 24) throw std::invalid_argument("dense blade kernel limited to 24 generators");
  const std::size_t size = std::size_t{1} << metric.dimension();
  if (x.size() != size || y.size() != size) throw std::invalid_argument("dense operand size does not match metric");
}

/// out[c] = sum_a sign(a, a^c) x[a] y[a^c], a increasing.
template <class Scalar>
OpCounts dense_blade_gather(std::span<const Scalar> x, std::span<const Scalar> y, std::uint64_t neg,
                            std::uint64_t c, Scalar& out) {
  const Scalar zero{};
  OpCounts counts;
  for (std::uint64_t a = 0; a < x.size(); ++a) {
    if (x[a] == zero) continue;
    const std::uint64_t b = a ^ c;
    if (y[b] == zero) continue;
    if (blade_product_sign(a, b, neg).is_negative())
      out -= x[a] * y[b];
    else
      out += x[a] * y[b];
    ++counts.multiplies;
    ++counts.sign_evaluations;
  }
  return counts;
}

}  // namespace detail

/// Reference: scatter every blade pair into out[a ^ b].
template <class Scalar>
std::vector<Scalar> dense_blade_product_serial(std::span<const Scalar> x, std::span<const Scalar> y,
                                               const Metric& metric, OpCounts* counts = nullptr) {
  detail::require_dense_shape(x, y, metric);
  const std::uint64_t neg = metric.negative_mask();
  const Scalar zero{};
  std::vector<Scalar> out(x.size());
  OpCounts total;
  for (std::uint64_t a = 0; a < x.size(); ++a) {
    if (x[a] == zero) continue;
    for (std::uint64_t b = 0; b < y.size(); ++b) {
      if (y[b] == zero) continue;
      if (blade_product_sign(a, b, neg).is_negative())
        out[a ^ b] -= x[a] * y[b];
      else
        out[a ^ b] += x[a] * y[b];
      ++total.multiplies;
      ++total.sign_evaluations;
    }
  }
  if (counts) *counts += total;
  return out;
}

/// Output-parallel gather. Each out[c] sums over a in increasing order, the
/// same order the serial scatter reaches it, so results agree bit for bit.
template <class Scalar>
std::vector<Scalar> dense_blade_product_parallel(std::span<const Scalar> x, std::span<const Scalar> y,
                                                 const Metric& metric, OpCounts* counts = nullptr) {
  detail::require_dense_shape(x, y, metric);
  const std::uint64_t neg = metric.negative_mask();
  std::vector<Scalar> out(x.size());
  const auto size = static_cast<std::int64_t>(x.size());
  std::uint64_t multiplies = 0;
  std::uint64_t signs = 0;
#pragma omp parallel for schedule(static) reduction(+ : multiplies, signs)
  for (std::int64_t c = 0; c < size; ++c) {
    const OpCounts k = detail::dense_blade_gather(x, y, neg, static_cast<std::uint64_t>(c), out[c]);
    multiplies += k.multiplies;
    signs += k.sign_evaluations;
  }
  if (counts) *counts += OpCounts{multiplies, signs};
  return out;
}

}  // namespace clbits
