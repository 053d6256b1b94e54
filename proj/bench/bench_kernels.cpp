#include <benchmark/benchmark.h>

#include <random>

#include "pmap/kernels.hpp"

namespace {

std::vector<double> law(size_t n) {
  std::mt19937_64 g(7);
  std::uniform_real_distribution<double> u(0, 1);
  std::vector<double> v(n);
  for (auto& x : v) x = u(g);
  return v;
}

}  // namespace

static void BM_convolve_serial(benchmark::State& st) {
  auto a = law(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(pmap::kernels::convolve_serial(a, a, a.size()));
}
static void BM_convolve_omp(benchmark::State& st) {
  auto a = law(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(pmap::kernels::convolve(a, a, a.size()));
}
static void BM_power_serial(benchmark::State& st) {
  auto a = law(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(pmap::kernels::power_serial(a, 100, a.size()));
}
static void BM_power_omp(benchmark::State& st) {
  auto a = law(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(pmap::kernels::power(a, 100, a.size()));
}

BENCHMARK(BM_convolve_serial)->Range(256, 8192);
BENCHMARK(BM_convolve_omp)->Range(256, 8192);
BENCHMARK(BM_power_serial)->Range(256, 4096);
BENCHMARK(BM_power_omp)->Range(256, 4096);

BENCHMARK_MAIN();
