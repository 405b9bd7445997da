// Serial vs OpenMP kernels, blade basis vs EFB, on dense double operands.

#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "clbits/blade_kernels.hpp"
#include "clbits/efb_kernels.hpp"
#include "clbits/metric.hpp"

namespace {

using clbits::EFBMultivector;
using clbits::Metric;

std::vector<double> dense(std::size_t size, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.5, 1.5);
  std::vector<double> v(size);
  for (auto& x : v) x = u(rng);
  return v;
}

EFBMultivector<double> dense_efb(unsigned m, std::mt19937_64& rng) {
  EFBMultivector<double> x(m);
  const auto values = dense(x.data().size(), rng);
  std::copy(values.begin(), values.end(), x.data().begin());
  return x;
}

void BM_BladeSerial(benchmark::State& state) {
  const auto m = static_cast<unsigned>(state.range(0));
  std::mt19937_64 rng(1);
  const Metric metric = Metric::interleaved(m);
  const auto x = dense(std::size_t{1} << (2 * m), rng);
  const auto y = dense(x.size(), rng);
  for (auto _ : state) benchmark::DoNotOptimize(clbits::dense_blade_product_serial<double>(x, y, metric));
}

void BM_BladeParallel(benchmark::State& state) {
  const auto m = static_cast<unsigned>(state.range(0));
  std::mt19937_64 rng(1);
  const Metric metric = Metric::interleaved(m);
  const auto x = dense(std::size_t{1} << (2 * m), rng);
  const auto y = dense(x.size(), rng);
  for (auto _ : state) benchmark::DoNotOptimize(clbits::dense_blade_product_parallel<double>(x, y, metric));
}

void BM_EFBSerial(benchmark::State& state) {
  const auto m = static_cast<unsigned>(state.range(0));
  std::mt19937_64 rng(2);
  const auto x = dense_efb(m, rng);
  const auto y = dense_efb(m, rng);
  for (auto _ : state) benchmark::DoNotOptimize(clbits::efb_product_serial(x, y));
}

void BM_EFBParallel(benchmark::State& state) {
  const auto m = static_cast<unsigned>(state.range(0));
  std::mt19937_64 rng(2);
  const auto x = dense_efb(m, rng);
  const auto y = dense_efb(m, rng);
  for (auto _ : state) benchmark::DoNotOptimize(clbits::efb_product_parallel(x, y));
}

}  // namespace

BENCHMARK(BM_BladeSerial)->DenseRange(1, 5)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_BladeParallel)->DenseRange(1, 5)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_EFBSerial)->DenseRange(1, 7)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_EFBParallel)->DenseRange(1, 7)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
