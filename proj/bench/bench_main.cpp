// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include "rpotent/generators.hpp"
#include "rpotent/parallel.hpp"
#include "rpotent/random.hpp"

namespace {

rpotent::RMatrix dense_input(std::size_t n, std::uint64_t seed) {
  rpotent::Rng rng(seed);
  rpotent::RMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m.set(i, j, rpotent::Rational(static_cast<long>(rng.uniform(0, 9)),
                                                                     static_cast<long>(rng.uniform(1, 5))));
  }
  return m;
}

void BM_MultiplySerial(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = dense_input(n, 1);
  const auto b = dense_input(n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(rpotent::serial::multiply(a, b));
}

void BM_MultiplyParallel(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = dense_input(n, 1);
  const auto b = dense_input(n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(rpotent::parallel::multiply(a, b));
}

void BM_ExhaustiveSweepSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(rpotent::serial::exhaustive_oracle_sweep(4));
}

void BM_ExhaustiveSweepParallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(rpotent::parallel::exhaustive_oracle_sweep(4));
}

void BM_RandomSweepSerial(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(rpotent::serial::random_oracle_sweep(n, 1000, 7));
}

void BM_RandomSweepParallel(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(rpotent::parallel::random_oracle_sweep(n, 1000, 7));
}

}  // namespace

BENCHMARK(BM_MultiplySerial)->Arg(8)->Arg(16)->Arg(32)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_MultiplyParallel)->Arg(8)->Arg(16)->Arg(32)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_ExhaustiveSweepSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ExhaustiveSweepParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RandomSweepSerial)->Arg(5)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RandomSweepParallel)->Arg(5)->Arg(8)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
