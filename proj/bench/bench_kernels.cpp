// Serial reference vs OpenMP kernel on the same inputs; OMP_NUM_THREADS
// sets the thread count.

#include <benchmark/benchmark.h>

#include <numeric>
#include <random>
#include <vector>

#include "gauss/cyclotomic.hpp"
#include "gauss/kernels.hpp"
#include "gauss/modular.hpp"

using namespace gauss;

namespace {

std::vector<num::BigInt> random_coeffs(std::size_t n, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> d(-1000, 1000);
  std::vector<num::BigInt> v(n);
  for (auto& x : v) x = d(rng);
  return v;
}

template <auto Kernel>
void BM_convolve(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = random_coeffs(n, 1), b = random_coeffs(n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(a, b));
}

// One class of exponents against another, as in a sibling product.
template <auto Kernel>
void BM_histogram(benchmark::State& state) {
  const std::uint64_t p = static_cast<std::uint64_t>(state.range(0));
  const auto g = modular::primitive_root(p);
  const auto xs = cyclo::class_exponents(p, g, 2, 0);
  const auto ys = cyclo::class_exponents(p, g, 2, 1);
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(xs, ys, p));
}

template <auto Kernel>
void BM_sweep(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(static_cast<std::uint64_t>(state.range(0))));
}

template <auto Kernel>
void BM_leaf_cosines(benchmark::State& state) {
  const std::uint64_t p = static_cast<std::uint64_t>(state.range(0));
  std::vector<std::uint64_t> residues((p - 1) / 2);
  std::iota(residues.begin(), residues.end(), 1);
  const num::TrigEvaluator trig(num::Precision{128});
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(trig, residues, p));
}

}  // namespace

BENCHMARK(BM_convolve<kernels::cyclic_convolve_serial>)->Name("convolve/serial")->Arg(257)->Arg(1024);
BENCHMARK(BM_convolve<kernels::cyclic_convolve_omp>)->Name("convolve/omp")->Arg(257)->Arg(1024);
BENCHMARK(BM_histogram<kernels::pair_sum_histogram_serial>)->Name("histogram/serial")->Arg(257)->Arg(65537);
BENCHMARK(BM_histogram<kernels::pair_sum_histogram_omp>)->Name("histogram/omp")->Arg(257)->Arg(65537);
BENCHMARK(BM_sweep<kernels::criterion_sweep_serial>)->Name("sweep/serial")->Arg(100000);
BENCHMARK(BM_sweep<kernels::criterion_sweep_omp>)->Name("sweep/omp")->Arg(100000);
BENCHMARK(BM_leaf_cosines<kernels::two_cos_enclosures_serial>)->Name("leaf_cos/serial")->Arg(257)->Arg(4097);
BENCHMARK(BM_leaf_cosines<kernels::two_cos_enclosures_omp>)->Name("leaf_cos/omp")->Arg(257)->Arg(4097);

BENCHMARK_MAIN();
