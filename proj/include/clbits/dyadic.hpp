#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace clbits {

/// Exact rational numerator / 2^exponent.
///
/// Kept canonical: the numerator is odd, or it is zero and the exponent is 0.
/// Equality is therefore structural.
class DyadicRational {
 public:
  DyadicRational() = default;
  DyadicRational(long v) : num_(v) {}  // NOLINT(google-explicit-constructor)
  DyadicRational(mpz_class numerator, unsigned exponent);

  /// numerator / 2^exponent
  static DyadicRational from_parts(long numerator, unsigned exponent) {
    return DyadicRational(mpz_class(numerator), exponent);
  }

  const mpz_class& numerator() const { return num_; }
  unsigned exponent() const { return exp_; }
  bool is_zero() const { return num_ == 0; }
  int sign() const { return sgn(num_); }

  DyadicRational operator-() const;
  DyadicRational& operator+=(const DyadicRational& o);
  DyadicRational& operator-=(const DyadicRational& o);
  DyadicRational& operator*=(const DyadicRational& o);

  friend DyadicRational operator+(DyadicRational a, const DyadicRational& b) { return a += b; }
  friend DyadicRational operator-(DyadicRational a, const DyadicRational& b) { return a -= b; }
  friend DyadicRational operator*(DyadicRational a, const DyadicRational& b) { return a *= b; }
  friend bool operator==(const DyadicRational& a, const DyadicRational& b) {
    return a.exp_ == b.exp_ && a.num_ == b.num_;
  }

  /// "p" or "p/q" with q = 2^exponent written out in decimal.
  std::string to_string() const;
  /// Accepts "p", "p/q" (q a power of two) and "p/2^e". Throws std::invalid_argument.
  static DyadicRational parse(std::string_view text);

  double to_double() const;

 private:
  void canonicalize();

  mpz_class num_{0};
  unsigned exp_ = 0;
};

std::ostream& operator<<(std::ostream& os, const DyadicRational& d);

}  // namespace clbits
