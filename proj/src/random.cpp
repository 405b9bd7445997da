#include "clbits/random.hpp"

namespace clbits {

DyadicRational random_dyadic(std::mt19937_64& rng, bool nonzero) {
  std::uniform_int_distribution<long> num(-64, 64);
  std::uniform_int_distribution<unsigned> exp(0, 4);
  long p = num(rng);
  while (nonzero && p == 0) p = num(rng);
  return DyadicRational(mpz_class(p), exp(rng));
}

Multivector random_multivector(const std::shared_ptr<const Metric>& metric, std::mt19937_64& rng, double density) {
  std::bernoulli_distribution present(density);
  Multivector x(metric);
  const std::uint64_t count = std::uint64_t{1} << metric->dimension();
  for (std::uint64_t mask = 0; mask < count; ++mask)
    if (density >= 1.0 || present(rng)) x.accumulate(Blade{mask}, random_dyadic(rng, true));
  return x;
}

ExactEFB random_dense_efb(unsigned m, std::mt19937_64& rng) {
  ExactEFB x(m);
  for (auto& c : x.data()) c = random_dyadic(rng, true);
  return x;
}

}  // namespace clbits
