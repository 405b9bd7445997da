#include "clbits/multivector.hpp"

#include <cctype>
#include <stdexcept>

namespace clbits {

namespace {

void require_same_metric(const Multivector& x, const Multivector& y) {
  if (x.metric_ptr() != y.metric_ptr() && !(x.metric() == y.metric()))
    throw std::invalid_argument("metric mismatch: " + x.metric().describe() + " vs " + y.metric().describe());
}

}  // namespace

Multivector::Multivector(Metric metric) : metric_(std::make_shared<const Metric>(std::move(metric))) {}

Multivector::Multivector(std::shared_ptr<const Metric> metric) : metric_(std::move(metric)) {
  if (!metric_) throw std::invalid_argument("multivector needs a metric");
}

Multivector Multivector::scalar(std::shared_ptr<const Metric> metric, DyadicRational value) {
  return blade(std::move(metric), Blade{0}, std::move(value));
}

Multivector Multivector::blade(std::shared_ptr<const Metric> metric, Blade b, DyadicRational coeff) {
  Multivector r(std::move(metric));
  if ((b.mask & ~r.metric().full_mask()) != 0)
    throw std::invalid_argument("blade does not fit metric " + r.metric().describe());
  r.accumulate(b, coeff);
  return r;
}

Multivector Multivector::generator(std::shared_ptr<const Metric> metric, unsigned i) {
  if (i == 0 || i > metric->dimension())
    throw std::invalid_argument("generator index " + std::to_string(i) + " outside " + metric->describe());
  return blade(std::move(metric), Blade{std::uint64_t{1} << (i - 1)});
}

DyadicRational Multivector::coefficient(Blade b) const {
  const auto it = terms_.find(b.mask);
  return it == terms_.end() ? DyadicRational{} : it->second;
}

void Multivector::accumulate(Blade b, const DyadicRational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(b.mask, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

bool operator==(const Multivector& a, const Multivector& b) {
  return a.metric() == b.metric() && a.terms_ == b.terms_;
}

Multivector mv_add(const Multivector& x, const Multivector& y) {
  require_same_metric(x, y);
  Multivector r = x;
  for (const auto& [mask, c] : y.terms()) r.accumulate(Blade{mask}, c);
  return r;
}

Multivector mv_sub(const Multivector& x, const Multivector& y) {
  require_same_metric(x, y);
  Multivector r = x;
  for (const auto& [mask, c] : y.terms()) r.accumulate(Blade{mask}, -c);
  return r;
}

Multivector mv_scale(const Multivector& x, const DyadicRational& s) {
  Multivector r(x.metric_ptr());
  if (s.is_zero()) return r;
  for (const auto& [mask, c] : x.terms()) r.accumulate(Blade{mask}, c * s);
  return r;
}

Multivector mv_mul(const Multivector& x, const Multivector& y, OpCounts* counts) {
  require_same_metric(x, y);
  const std::uint64_t neg = x.metric().negative_mask();
  Multivector r(x.metric_ptr());
  for (const auto& [a, ca] : x.terms()) {
    for (const auto& [b, cb] : y.terms()) {
      const SignBit s = blade_product_sign(a, b, neg);
      DyadicRational prod = ca * cb;
      r.accumulate(Blade{a ^ b}, s.is_negative() ? -prod : prod);
    }
  }
  if (counts) {
    const auto pairs = static_cast<std::uint64_t>(x.size()) * y.size();
    counts->multiplies += pairs;
    counts->sign_evaluations += pairs;
  }
  return r;
}

Multivector grade_involution(const Multivector& x) {
  Multivector r(x.metric_ptr());
  for (const auto& [mask, c] : x.terms()) r.accumulate(Blade{mask}, Blade{mask}.grade() % 2 ? -c : c);
  return r;
}

std::string to_string(const Multivector& x) {
  if (x.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [mask, c] : x.terms()) {
    const bool negative = c.sign() < 0;
    const DyadicRational magnitude = negative ? -c : c;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const bool unit = magnitude == DyadicRational(1);
    bool need_space = false;
    if (!unit || mask == 0) {
      out += magnitude.to_string();
      need_space = true;
    }
    for (unsigned i = 0; i < 64; ++i) {
      if ((mask >> i) & 1U) {
        if (need_space) out += ' ';
        out += "g" + std::to_string(i + 1);
        need_space = true;
      }
    }
  }
  return out;
}

namespace {

class TermScanner {
 public:
  TermScanner(std::string_view text, std::shared_ptr<const Metric> metric)
      : text_(text), metric_(std::move(metric)) {}

  Multivector run() {
    Multivector result(metric_);
    skip_ws();
    if (at_end()) fail("empty multivector");
    bool first = true;
    while (!at_end()) {
      bool negative = false;
      if (peek() == '+' || peek() == '-') {
        negative = peek() == '-';
        ++pos_;
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      read_term(result, negative);
      skip_ws();
    }
    return result;
  }

 private:
  void read_term(Multivector& result, bool negative) {
    DyadicRational coeff = 1;
    bool have_coeff = false;
    if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      const std::size_t start = pos_;
      while (!at_end() && !std::isspace(static_cast<unsigned char>(peek())) && peek() != '+' && peek() != '-' &&
             peek() != 'g')
        ++pos_;
      coeff = DyadicRational::parse(text_.substr(start, pos_ - start));
      have_coeff = true;
      skip_ws();
    }
    SignBit sign = negative ? SignBit::minus() : SignBit::plus();
    Blade blade{0};
    bool have_gen = false;
    while (!at_end() && peek() == 'g') {
      ++pos_;
      const std::size_t start = pos_;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      if (start == pos_ || pos_ - start > 3) fail("bad generator name");
      const auto idx = std::stoul(std::string(text_.substr(start, pos_ - start)));
      if (idx == 0 || idx > metric_->dimension())
        fail("generator g" + std::to_string(idx) + " outside " + metric_->describe());
      const auto [s, b] = blade_product(blade, Blade{std::uint64_t{1} << (idx - 1)}, *metric_);
      sign *= s;
      blade = b;
      have_gen = true;
      skip_ws();
    }
    if (!have_coeff && !have_gen) fail("expected a coefficient or generator");
    result.accumulate(blade, sign.is_negative() ? -coeff : coeff);
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("multivector parse error at column " + std::to_string(pos_ + 1) + ": " + what);
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  std::string_view text_;
  std::shared_ptr<const Metric> metric_;
  std::size_t pos_ = 0;
};

}  // namespace

Multivector parse_multivector(std::string_view text, std::shared_ptr<const Metric> metric) {
  return TermScanner(text, std::move(metric)).run();
}

}  // namespace clbits
