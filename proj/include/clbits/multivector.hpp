#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <string_view>

#include "clbits/dyadic.hpp"
#include "clbits/metric.hpp"
#include "clbits/op_counts.hpp"

namespace clbits {

/// Exact element of the Clifford algebra over a diagonal metric, stored as a
/// sparse map from blade mask to coefficient. Zero coefficients are never stored.
class Multivector {
 public:
  using Terms = std::map<std::uint64_t, DyadicRational>;

  explicit Multivector(Metric metric);
  explicit Multivector(std::shared_ptr<const Metric> metric);

  static Multivector scalar(std::shared_ptr<const Metric> metric, DyadicRational value);
  static Multivector blade(std::shared_ptr<const Metric> metric, Blade b, DyadicRational coeff = 1);
  /// Generator i, 1-based (gamma_i).
  static Multivector generator(std::shared_ptr<const Metric> metric, unsigned i);

  const Metric& metric() const { return *metric_; }
  const std::shared_ptr<const Metric>& metric_ptr() const { return metric_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Coefficient of blade b (zero if absent).
  DyadicRational coefficient(Blade b) const;
  /// Adds c to the coefficient of b, dropping the entry if it cancels.
  void accumulate(Blade b, const DyadicRational& c);

  friend bool operator==(const Multivector& a, const Multivector& b);

 private:
  std::shared_ptr<const Metric> metric_;
  Terms terms_;
};

Multivector mv_add(const Multivector& x, const Multivector& y);
Multivector mv_sub(const Multivector& x, const Multivector& y);
Multivector mv_scale(const Multivector& x, const DyadicRational& s);
/// Geometric product. When counts is given, one multiply and one sign
/// evaluation are recorded per blade pair.
Multivector mv_mul(const Multivector& x, const Multivector& y, OpCounts* counts = nullptr);

/// alpha: every blade picks up (-1)^grade.
Multivector grade_involution(const Multivector& x);

inline Multivector operator+(const Multivector& x, const Multivector& y) { return mv_add(x, y); }
inline Multivector operator-(const Multivector& x, const Multivector& y) { return mv_sub(x, y); }
inline Multivector operator*(const Multivector& x, const Multivector& y) { return mv_mul(x, y); }
inline Multivector operator*(const DyadicRational& s, const Multivector& x) { return mv_scale(x, s); }

/// Text form: "1/2 g1 g2 - 3 g4". Terms are printed by increasing mask;
/// zero prints as "0".
std::string to_string(const Multivector& x);

/// Parses the text form. Generators may appear in any order and may repeat;
/// the product is canonicalized through blade_product. Throws
/// std::invalid_argument on malformed input or an out-of-range generator.
Multivector parse_multivector(std::string_view text, std::shared_ptr<const Metric> metric);

}  // namespace clbits
