#include "clbits/dyadic.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

namespace clbits {

DyadicRational::DyadicRational(mpz_class numerator, unsigned exponent)
    : num_(std::move(numerator)), exp_(exponent) {
  canonicalize();
}

void DyadicRational::canonicalize() {
  if (num_ == 0) {
    exp_ = 0;
    return;
  }
  if (exp_ == 0) return;
  const auto tz = static_cast<unsigned>(mpz_scan1(num_.get_mpz_t(), 0));
  const unsigned shift = tz < exp_ ? tz : exp_;
  if (shift > 0) {
    mpz_tdiv_q_2exp(num_.get_mpz_t(), num_.get_mpz_t(), shift);
    exp_ -= shift;
  }
}

DyadicRational DyadicRational::operator-() const {
  DyadicRational r = *this;
  r.num_ = -r.num_;
  return r;
}

DyadicRational& DyadicRational::operator+=(const DyadicRational& o) {
  if (o.is_zero()) return *this;
  if (exp_ == o.exp_) {
    num_ += o.num_;
  } else if (exp_ > o.exp_) {
    mpz_class t;
    mpz_mul_2exp(t.get_mpz_t(), o.num_.get_mpz_t(), exp_ - o.exp_);
    num_ += t;
  } else {
    mpz_mul_2exp(num_.get_mpz_t(), num_.get_mpz_t(), o.exp_ - exp_);
    num_ += o.num_;
    exp_ = o.exp_;
  }
  canonicalize();
  return *this;
}

DyadicRational& DyadicRational::operator-=(const DyadicRational& o) { return *this += -o; }

DyadicRational& DyadicRational::operator*=(const DyadicRational& o) {
  num_ *= o.num_;
  exp_ += o.exp_;
  canonicalize();
  return *this;
}

std::string DyadicRational::to_string() const {
  if (exp_ == 0) return num_.get_str();
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), 2, exp_);
  return num_.get_str() + "/" + den.get_str();
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

DyadicRational DyadicRational::parse(std::string_view text) {
  const auto bad = [&] { return std::invalid_argument("not a dyadic rational: '" + std::string(text) + "'"); };
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num_text = body.substr(0, slash);
  if (!all_digits(num_text)) throw bad();
  mpz_class num{std::string(num_text)};
  if (negative) num = -num;
  if (slash == std::string_view::npos) return DyadicRational(num, 0);

  std::string_view den_text = body.substr(slash + 1);
  if (den_text.starts_with("2^")) {
    den_text.remove_prefix(2);
    if (!all_digits(den_text) || den_text.size() > 6) throw bad();
    return DyadicRational(num, static_cast<unsigned>(std::stoul(std::string(den_text))));
  }
  if (!all_digits(den_text)) throw bad();
  mpz_class den{std::string(den_text)};
  if (den == 0 || mpz_popcount(den.get_mpz_t()) != 1) throw bad();
  return DyadicRational(num, static_cast<unsigned>(mpz_scan1(den.get_mpz_t(), 0)));
}

double DyadicRational::to_double() const { return std::ldexp(num_.get_d(), -static_cast<int>(exp_)); }

std::ostream& operator<<(std::ostream& os, const DyadicRational& d) { return os << d.to_string(); }

}  // namespace clbits
