#include "clbits/binary.hpp"

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace clbits {

SignBit SignBit::from_int(int v) {
  if (v == 1) return plus();
  if (v == -1) return minus();
  throw std::invalid_argument("sign must be +1 or -1, got " + std::to_string(v));
}

std::ostream& operator<<(std::ostream& os, SignBit s) { return os << (s.is_negative() ? "-1" : "+1"); }

namespace {

void require_non_negative(std::int64_t n) {
  if (n < 0) throw std::invalid_argument("bit extraction needs n >= 0, got " + std::to_string(n));
}

}  // namespace

unsigned bit(std::int64_t n, unsigned i) {
  require_non_negative(n);
  if (i >= 63) return 0;
  return static_cast<unsigned>((static_cast<std::uint64_t>(n) >> i) & 1U);
}

SignBit sign_bit(std::int64_t n, unsigned i) { return SignBit::from_bit(bit(n, i)); }

SignBit lucas_sign(std::int64_t n, unsigned i) {
  require_non_negative(n);
  if (i >= 63) return SignBit::plus();  // 2^i > n: C(n, 2^i) = 0
  const auto k = std::uint64_t{1} << i;
  mpz_class c;
  mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return SignBit::from_bit(mpz_odd_p(c.get_mpz_t()) ? 1U : 0U);
}

SignBit half_pochhammer_sign(std::int64_t n) {
  require_non_negative(n);
  mpz_class e = mpz_class(n) * (mpz_class(n) - 1) / 2;
  return SignBit::from_bit(mpz_odd_p(e.get_mpz_t()) ? 1U : 0U);
}

int neg_mod8(std::int64_t n) {
  const int r = static_cast<int>(((n % 8) + 8) % 8);
  return r == 0 ? 0 : 8 - r;
}

int mod8(std::int64_t n) {
  if (n < 0) return neg_mod8(-(n % 8));
  return static_cast<int>(n % 8);
}

}  // namespace clbits
