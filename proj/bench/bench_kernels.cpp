#include <benchmark/benchmark.h>

#include "thooks/kernels.hpp"

namespace k = thooks::kernels;

namespace {

std::vector<mpz_class> ones(int n) { return std::vector<mpz_class>(static_cast<std::size_t>(n) + 1, 1); }

void BM_DivideSerial(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int m = static_cast<int>(state.range(1));
  for (auto _ : state) {
    auto c = ones(n);
    k::serial::divide_by_one_minus_qm(c, m);
    benchmark::DoNotOptimize(c.back());
  }
}

void BM_DivideParallel(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int m = static_cast<int>(state.range(1));
  for (auto _ : state) {
    auto c = ones(n);
    k::parallel::divide_by_one_minus_qm(c, m);
    benchmark::DoNotOptimize(c.back());
  }
}

void BM_EtaInverseSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(k::serial::eta_inverse_power(2, static_cast<int>(state.range(0))));
}

void BM_EtaInverseParallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(k::parallel::eta_inverse_power(2, static_cast<int>(state.range(0))));
}

void BM_HistogramSerial(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(k::serial::hook_residue_histogram(static_cast<int>(state.range(0)), 2, 3));
}

void BM_HistogramParallel(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(k::parallel::hook_residue_histogram(static_cast<int>(state.range(0)), 2, 3));
}

}  // namespace

BENCHMARK(BM_DivideSerial)->Args({5100, 1})->Args({5100, 128})->Args({5100, 1024});
BENCHMARK(BM_DivideParallel)->Args({5100, 1})->Args({5100, 128})->Args({5100, 1024});
BENCHMARK(BM_EtaInverseSerial)->Arg(1000)->Arg(5100)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EtaInverseParallel)->Arg(1000)->Arg(5100)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_HistogramSerial)->Arg(20)->Arg(30)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_HistogramParallel)->Arg(20)->Arg(30)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
