#pragma once

// Data-parallel inner loops. Each kernel has an OpenMP version (used by the
// library) and a serial reference with a different loop structure that the
// tests compare against; bench/ times the pairs.

#include <cstdint>
#include <span>
#include <vector>

#include "gauss/numkernel.hpp"

namespace gauss::kernels {

using num::BigInt;

// c[k] = sum over i + j = k (mod n) of a[i] * b[j]; a, b of length n.
std::vector<BigInt> cyclic_convolve_serial(std::span<const BigInt> a, std::span<const BigInt> b);
std::vector<BigInt> cyclic_convolve_omp(std::span<const BigInt> a, std::span<const BigInt> b);

// hist[s] = #{(x, y) in xs * ys : x + y = s (mod p)}.
std::vector<std::uint64_t> pair_sum_histogram_serial(std::span<const std::uint64_t> xs,
                                                     std::span<const std::uint64_t> ys,
                                                     std::uint64_t p);
std::vector<std::uint64_t> pair_sum_histogram_omp(std::span<const std::uint64_t> xs,
                                                  std::span<const std::uint64_t> ys,
                                                  std::uint64_t p);

// Every n in [1, n_max] where the factorization criterion and the totient
// criterion disagree (expected empty), plus the constructible count.
struct SweepResult {
  std::vector<std::uint64_t> disagreements;
  std::uint64_t constructible_count = 0;
};
SweepResult criterion_sweep_serial(std::uint64_t n_max);
SweepResult criterion_sweep_omp(std::uint64_t n_max);

// Enclosures of 2*cos(2*pi*s/p) for each s in `residues`.
std::vector<num::DyadicInterval> two_cos_enclosures_serial(const num::TrigEvaluator& trig,
                                                           std::span<const std::uint64_t> residues,
                                                           std::uint64_t p);
std::vector<num::DyadicInterval> two_cos_enclosures_omp(const num::TrigEvaluator& trig,
                                                        std::span<const std::uint64_t> residues,
                                                        std::uint64_t p);

// Thread count for the OpenMP kernels; 0 restores the runtime default.
void set_jobs(int jobs);
int max_jobs();

}  // namespace gauss::kernels
