#include <algorithm>
#include <memory>
#include <random>
#include <stdexcept>
#include <vector>

#include <gtest/gtest.h>

#include "clbits/blade_oracle.hpp"
#include "clbits/efb_convert.hpp"
#include "clbits/multivector.hpp"
#include "clbits/random.hpp"

using namespace clbits;

namespace {

// Independent blade product: write both blades as generator lists, bubble-sort
// the concatenation (one sign flip per swap of distinct generators) and
// contract adjacent equal generators using the metric.
std::pair<int, std::uint64_t> naive_product(std::uint64_t a, std::uint64_t b, const Metric& metric) {
  std::vector<unsigned> word;
  for (unsigned i = 0; i < 64; ++i)
    if ((a >> i) & 1U) word.push_back(i);
  for (unsigned i = 0; i < 64; ++i)
    if ((b >> i) & 1U) word.push_back(i);
  int sign = 1;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t j = 0; j + 1 < word.size(); ++j) {
      if (word[j] > word[j + 1]) {
        std::swap(word[j], word[j + 1]);
        sign = -sign;
        changed = true;
      } else if (word[j] == word[j + 1]) {
        sign *= metric.square(word[j]).value();
        word.erase(word.begin() + static_cast<long>(j), word.begin() + static_cast<long>(j) + 2);
        changed = true;
        break;
      }
    }
  }
  std::uint64_t mask = 0;
  for (unsigned g : word) mask |= std::uint64_t{1} << g;
  return {sign, mask};
}

std::shared_ptr<const Metric> shared(Metric m) { return std::make_shared<const Metric>(std::move(m)); }

}  // namespace

TEST(Metric, Layouts) {
  const Metric block = Metric::block(2, 3);
  EXPECT_EQ(block.dimension(), 5U);
  EXPECT_EQ(block.positive(), 2U);
  EXPECT_EQ(block.negative(), 3U);
  EXPECT_EQ(block.nu(), -1);
  EXPECT_EQ(block.negative_mask(), 0b11100U);
  const Metric inter = Metric::interleaved(2);
  EXPECT_EQ(inter.negative_mask(), 0b1010U);
  EXPECT_EQ(inter.nu(), 0);
}

TEST(BladeProduct, Examples) {
  const Metric m = Metric::interleaved(1);
  auto [s11, r11] = blade_product(Blade{1}, Blade{1}, m);
  EXPECT_EQ(s11, SignBit::plus());
  EXPECT_EQ(r11.mask, 0U);
  auto [s22, r22] = blade_product(Blade{2}, Blade{2}, m);
  EXPECT_EQ(s22, SignBit::minus());
  EXPECT_EQ(r22.mask, 0U);
  auto [s21, r21] = blade_product(Blade{2}, Blade{1}, m);
  EXPECT_EQ(s21, SignBit::minus());
  EXPECT_EQ(r21.mask, 3U);
}

TEST(BladeProduct, RejectsMasksOutsideMetric) {
  EXPECT_THROW(blade_product(Blade{4}, Blade{1}, Metric::interleaved(1)), std::invalid_argument);
}

TEST(BladeProduct, MatchesNaiveReductionExhaustively) {
  for (unsigned k = 0; k <= 3; ++k)
    for (unsigned l = 0; l + k <= 5; ++l) {
      const Metric m = Metric::block(k, l);
      const std::uint64_t size = std::uint64_t{1} << m.dimension();
      for (std::uint64_t a = 0; a < size; ++a)
        for (std::uint64_t b = 0; b < size; ++b) {
          const auto [s, r] = blade_product(Blade{a}, Blade{b}, m);
          const auto [ns, nr] = naive_product(a, b, m);
          ASSERT_EQ(s.value(), ns) << m.describe() << " " << a << " " << b;
          ASSERT_EQ(r.mask, nr);
        }
    }
}

TEST(BladeProduct, AssociativeExhaustiveUpToSix) {
  for (unsigned n = 0; n <= 6; ++n) {
    const Metric m = Metric::block(n / 2, n - n / 2);
    const std::uint64_t size = std::uint64_t{1} << n;
    for (std::uint64_t a = 0; a < size; ++a)
      for (std::uint64_t b = 0; b < size; ++b)
        for (std::uint64_t c = 0; c < size; ++c) {
          const auto [s_ab, ab] = blade_product(Blade{a}, Blade{b}, m);
          const auto [s_left, left] = blade_product(ab, Blade{c}, m);
          const auto [s_bc, bc] = blade_product(Blade{b}, Blade{c}, m);
          const auto [s_right, right] = blade_product(Blade{a}, bc, m);
          ASSERT_EQ(s_ab * s_left, s_bc * s_right) << n << ": " << a << " " << b << " " << c;
          ASSERT_EQ(left, right);
        }
  }
}

TEST(BladeProduct, AssociativeRandomUpToTwelve) {
  std::mt19937_64 rng(3);
  for (unsigned n = 7; n <= 12; ++n) {
    const Metric m = Metric::block(n / 3, n - n / 3);
    std::uniform_int_distribution<std::uint64_t> pick(0, (std::uint64_t{1} << n) - 1);
    for (int trial = 0; trial < 20000; ++trial) {
      const Blade a{pick(rng)}, b{pick(rng)}, c{pick(rng)};
      const auto [s_ab, ab] = blade_product(a, b, m);
      const auto [s_left, left] = blade_product(ab, c, m);
      const auto [s_bc, bc] = blade_product(b, c, m);
      const auto [s_right, right] = blade_product(a, bc, m);
      ASSERT_EQ(s_ab * s_left, s_bc * s_right);
      ASSERT_EQ(left, right);
    }
  }
}

TEST(Multivector, ProductExamples) {
  const auto metric = neutral_metric(1);
  const Multivector one = Multivector::scalar(metric, 1);
  const Multivector g1 = Multivector::generator(metric, 1);
  EXPECT_TRUE(((one + g1) * (one - g1)).is_zero());

  const WittBasis w = witt_basis(1);
  EXPECT_TRUE((w.p[0] * w.p[0]).is_zero());
  EXPECT_EQ(w.p[0] * w.q[0] + w.q[0] * w.p[0], one);
}

TEST(Multivector, RejectsMixedMetrics) {
  const Multivector x = Multivector::scalar(neutral_metric(1), 1);
  const Multivector y = Multivector::scalar(shared(Metric::block(2, 0)), 1);
  EXPECT_THROW(x * y, std::invalid_argument);
  EXPECT_THROW(x + y, std::invalid_argument);
  EXPECT_THROW(x - y, std::invalid_argument);
}

TEST(Multivector, AlgebraLawsOnRandomElements) {
  std::mt19937_64 rng(5);
  const auto metric = shared(Metric::block(2, 2));
  for (int i = 0; i < 30; ++i) {
    const auto x = random_multivector(metric, rng);
    const auto y = random_multivector(metric, rng);
    const auto z = random_multivector(metric, rng);
    EXPECT_EQ((x * y) * z, x * (y * z));
    EXPECT_EQ(x * (y + z), x * y + x * z);
    EXPECT_EQ(grade_involution(x * y), grade_involution(x) * grade_involution(y));
    EXPECT_EQ(grade_involution(grade_involution(x)), x);
  }
}

TEST(Multivector, GradeInvolutionExamples) {
  const auto metric = neutral_metric(2);
  const Multivector g1 = Multivector::generator(metric, 1);
  EXPECT_EQ(grade_involution(g1), mv_scale(g1, -1));
  const Multivector g12 = Multivector::blade(metric, Blade{0b11});
  EXPECT_EQ(grade_involution(g12), g12);

  const WittBasis w = witt_basis(2);
  const Multivector word = w.q[0] * w.p[0] * w.q[1];
  for (const auto& [mask, c] : word.terms()) EXPECT_EQ(Blade{mask}.grade() % 2, 1U);
  EXPECT_EQ(grade_involution(word), mv_scale(word, -1));
}

TEST(Multivector, TextRoundTrip) {
  const auto metric = neutral_metric(2);
  const Multivector x = parse_multivector("1/2 g1 g2 - 3 g4", metric);
  EXPECT_EQ(to_string(x), "1/2 g1 g2 - 3 g4");
  EXPECT_EQ(parse_multivector(to_string(x), metric), x);

  // reordering and repeats are canonicalized with their signs
  EXPECT_EQ(to_string(parse_multivector("g2 g1", metric)), "-g1 g2");
  EXPECT_EQ(to_string(parse_multivector("g2 g2", metric)), "-1");
  EXPECT_EQ(to_string(parse_multivector("g1 g3 g1", metric)), "-g3");
  EXPECT_EQ(to_string(parse_multivector("2 - 2", metric)), "0");
  EXPECT_EQ(to_string(parse_multivector("-g1 + 1/2^2 g2", metric)), "-g1 + 1/4 g2");

  std::mt19937_64 rng(9);
  for (int i = 0; i < 100; ++i) {
    const auto r = random_multivector(metric, rng);
    ASSERT_EQ(parse_multivector(to_string(r), metric), r) << to_string(r);
  }
}

TEST(Multivector, ParseErrors) {
  const auto metric = neutral_metric(2);
  for (const char* bad : {"", "g5", "g0", "1 g1 2", "g1 + ", "x", "1/3 g1", "g1 g2 g"})
    EXPECT_THROW(parse_multivector(bad, metric), std::invalid_argument) << bad;
}

TEST(Oracle, VolumeElement) {
  EXPECT_EQ(volume_element(Metric::block(1, 1)).mask, 0b11U);
  EXPECT_EQ(volume_element(Metric::block(2, 2)).mask, 0b1111U);
  EXPECT_EQ(volume_element(Metric::block(0, 0)).mask, 0U);
}

TEST(Oracle, OmegaSquaredExamples) {
  // gamma1 gamma2 gamma1 gamma2 = -gamma1^2 gamma2^2
  EXPECT_EQ(omega_squared_oracle(Metric::block(2, 0)), SignBit::minus());
  EXPECT_EQ(omega_squared_oracle(Metric::block(1, 1)), SignBit::plus());
  EXPECT_EQ(omega_squared_oracle(Metric::block(0, 0)), SignBit::plus());
}

TEST(Oracle, OmegaSquaredIsSecondBitOfNu) {
  for (unsigned k = 0; k <= 16; ++k)
    for (unsigned l = 0; l <= 16; ++l) {
      const std::int64_t nu = static_cast<std::int64_t>(k) - l;
      EXPECT_EQ(omega_squared_oracle(Metric::block(k, l)), sign_bit(nu < 0 ? neg_mod8(-nu) : nu % 8, 1));
    }
}

TEST(Oracle, CenterExamples) {
  EXPECT_TRUE(center_check(Metric::block(0, 1)));
  EXPECT_FALSE(center_check(Metric::block(1, 1)));
  EXPECT_TRUE(center_check(Metric::block(2, 1)));
  EXPECT_FALSE(center_check(Metric::block(0, 0)));
}

TEST(Oracle, CenterIffOddDimension) {
  for (unsigned k = 0; k <= 12; ++k)
    for (unsigned l = 0; l <= 12; ++l) EXPECT_EQ(center_check(Metric::block(k, l)), (k + l) % 2 == 1) << k << "," << l;
}

TEST(Oracle, TauBlade) {
  EXPECT_EQ(tau_blade(2, 2).mask, 0b1100U);
  EXPECT_EQ(tau_blade(1, 1).mask, 0b1U);
  EXPECT_EQ(tau_blade(0, 2).mask, 0b11U);
  EXPECT_EQ(tau_blade(0, 0).mask, 0U);
  EXPECT_THROW(tau_blade(1, 2), std::domain_error);
  EXPECT_THROW(tau_squared_oracle(2, 1), std::domain_error);
  EXPECT_THROW(omega_tau_squared_oracle(0, 3), std::domain_error);
  EXPECT_THROW(check_inner_involutions(0, 1), std::domain_error);
}

TEST(Oracle, TauSquares) {
  EXPECT_EQ(tau_squared_oracle(2, 2), SignBit::minus());
  EXPECT_EQ(tau_squared_oracle(1, 1), SignBit::plus());
  EXPECT_EQ(omega_tau_squared_oracle(2, 2), SignBit::minus());
}

TEST(Oracle, InnerInvolutions) {
  for (unsigned k = 0; k <= 6; ++k)
    for (unsigned l = 0; l <= 6; ++l)
      if ((k + l) % 2 == 0) {
        const auto r = check_inner_involutions(k, l);
        EXPECT_TRUE(r.omega_negates) << k << "," << l;
        EXPECT_TRUE(r.tau_dualizes) << k << "," << l;
        EXPECT_TRUE(r.omega_tau_antidualizes) << k << "," << l;
      }
}

TEST(Witt, RelationsExhaustiveUpToFour) {
  for (unsigned m = 1; m <= 4; ++m) {
    const WittBasis w = witt_basis(m);
    const auto metric = neutral_metric(m);
    const Multivector zero(metric);
    const Multivector one = Multivector::scalar(metric, 1);
    for (unsigned i = 0; i < m; ++i) {
      EXPECT_EQ(to_string(w.p[i]), "1/2 g" + std::to_string(2 * i + 1) + " + 1/2 g" + std::to_string(2 * i + 2));
      for (unsigned j = 0; j < m; ++j) {
        EXPECT_EQ(w.p[i] * w.p[j] + w.p[j] * w.p[i], zero);
        EXPECT_EQ(w.q[i] * w.q[j] + w.q[j] * w.q[i], zero);
        EXPECT_EQ(w.p[i] * w.q[j] + w.q[j] * w.p[i], i == j ? one : zero);
      }
    }
  }
}
