// Serial reference kernels vs their OpenMP counterparts, plus the fast transform.

#include <benchmark/benchmark.h>

#include <complex>
#include <numeric>
#include <random>
#include <vector>

#include "zetaspec/kernels.hpp"
#include "zetaspec/spectral.hpp"

using namespace zetaspec;

namespace {

std::vector<double> indicator(std::size_t n) {
  std::mt19937_64 rng(7);
  std::bernoulli_distribution mark(0.3);
  std::vector<double> v(n);
  for (auto& x : v) x = mark(rng) ? 1.0 : 0.0;
  return v;
}

template <auto Kernel>
void BM_direct_dft(benchmark::State& state) {
  const auto v = indicator(static_cast<std::size_t>(state.range(0)));
  std::vector<std::complex<double>> out(v.size());
  for (auto _ : state) {
    Kernel(v, out);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetComplexityN(state.range(0));
}

void BM_fast_dft(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto v = indicator(n);
  const GridSpec grid{1.0, n, 0.0};
  for (auto _ : state) benchmark::DoNotOptimize(dft(v, grid, DftMethod::fast));
}

template <auto Kernel>
void BM_shifted_dft(benchmark::State& state) {
  const auto v = indicator(static_cast<std::size_t>(state.range(0)));
  std::vector<std::complex<double>> out(v.size());
  const double shift = 2.0 * static_cast<double>(v.size());
  for (auto _ : state) {
    Kernel(v, 1.0, shift, out);
    benchmark::DoNotOptimize(out.data());
  }
}

template <auto Kernel>
void BM_partial_inverse(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto spectrum = dft(indicator(n), GridSpec{1.0, n, 0.0}, DftMethod::fast).bins;
  std::vector<std::size_t> bins(n);
  std::iota(bins.begin(), bins.end(), 0);
  std::vector<double> out(n);
  for (auto _ : state) {
    Kernel(spectrum, bins, out);
    benchmark::DoNotOptimize(out.data());
  }
}

template <auto Kernel>
void BM_sample_z(benchmark::State& state) {
  const double t_max = static_cast<double>(state.range(0));
  std::vector<double> out(kernels::scan_points(0.0, t_max, 0.05));
  for (auto _ : state) {
    Kernel(0.0, t_max, 0.05, 250.0, out);
    benchmark::DoNotOptimize(out.data());
  }
}

}  // namespace

BENCHMARK(BM_direct_dft<kernels::serial::direct_dft>)->Name("direct_dft/serial")->RangeMultiplier(4)->Range(256, 16384);
BENCHMARK(BM_direct_dft<kernels::direct_dft>)->Name("direct_dft/omp")->RangeMultiplier(4)->Range(256, 16384)->UseRealTime();
BENCHMARK(BM_fast_dft)->Name("fast_dft")->RangeMultiplier(4)->Range(256, 16384);
BENCHMARK(BM_fast_dft)->Name("fast_dft/bluestein")->Arg(1009)->Arg(10007);
BENCHMARK(BM_shifted_dft<kernels::serial::shifted_dft>)->Name("shifted_dft/serial")->Arg(256)->Arg(4096);
BENCHMARK(BM_shifted_dft<kernels::shifted_dft>)->Name("shifted_dft/omp")->Arg(256)->Arg(4096)->UseRealTime();
BENCHMARK(BM_partial_inverse<kernels::serial::partial_inverse>)->Name("partial_inverse/serial")->Arg(1024)->Arg(4096);
BENCHMARK(BM_partial_inverse<kernels::partial_inverse>)->Name("partial_inverse/omp")->Arg(1024)->Arg(4096)->UseRealTime();
BENCHMARK(BM_sample_z<kernels::serial::sample_z>)->Name("sample_z/serial")->Arg(100)->Arg(1000);
BENCHMARK(BM_sample_z<kernels::sample_z>)->Name("sample_z/omp")->Arg(100)->Arg(1000)->UseRealTime();

BENCHMARK_MAIN();
