#include "gauss/kernels.hpp"

#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "gauss/criterion.hpp"

namespace gauss::kernels {

std::vector<BigInt> cyclic_convolve_serial(std::span<const BigInt> a, std::span<const BigInt> b) {
  if (a.size() != b.size()) throw std::invalid_argument("cyclic_convolve: length mismatch");
  const std::size_t n = a.size();
  std::vector<BigInt> c(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (b[j] == 0) continue;
      const std::size_t k = (i + j) % n;
      mpz_addmul(c[k].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
  }
  return c;
}

std::vector<BigInt> cyclic_convolve_omp(std::span<const BigInt> a, std::span<const BigInt> b) {
  if (a.size() != b.size()) throw std::invalid_argument("cyclic_convolve: length mismatch");
  const auto n = static_cast<std::int64_t>(a.size());
  std::vector<BigInt> c(static_cast<std::size_t>(n));
  // Gather form: each output coefficient is owned by one thread.
#pragma omp parallel for schedule(static)
  for (std::int64_t k = 0; k < n; ++k) {
    mpz_t acc;
    mpz_init(acc);
    for (std::int64_t i = 0; i < n; ++i) {
      const auto& ai = a[static_cast<std::size_t>(i)];
      if (ai == 0) continue;
      const std::int64_t j = (k - i + n) % n;
      const auto& bj = b[static_cast<std::size_t>(j)];
      if (bj == 0) continue;
      mpz_addmul(acc, ai.get_mpz_t(), bj.get_mpz_t());
    }
    mpz_set(c[static_cast<std::size_t>(k)].get_mpz_t(), acc);
    mpz_clear(acc);
  }
  return c;
}

std::vector<std::uint64_t> pair_sum_histogram_serial(std::span<const std::uint64_t> xs,
                                                     std::span<const std::uint64_t> ys,
                                                     std::uint64_t p) {
  std::vector<std::uint64_t> hist(p, 0);
  for (auto x : xs) {
    for (auto y : ys) ++hist[(x + y) % p];
  }
  return hist;
}

std::vector<std::uint64_t> pair_sum_histogram_omp(std::span<const std::uint64_t> xs,
                                                  std::span<const std::uint64_t> ys,
                                                  std::uint64_t p) {
  std::vector<std::uint64_t> hist(p, 0);
  const auto nx = static_cast<std::int64_t>(xs.size());
#pragma omp parallel
  {
    std::vector<std::uint64_t> local(p, 0);
#pragma omp for schedule(static) nowait
    for (std::int64_t i = 0; i < nx; ++i) {
      const std::uint64_t x = xs[static_cast<std::size_t>(i)];
      for (auto y : ys) {
        std::uint64_t s = x + y;
        if (s >= p) s -= p;
        ++local[s];
      }
    }
#pragma omp critical
    for (std::uint64_t s = 0; s < p; ++s) hist[s] += local[s];
  }
  return hist;
}

SweepResult criterion_sweep_serial(std::uint64_t n_max) {
  SweepResult r;
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    const bool by_form = criterion::is_constructible(n).constructible;
    if (by_form) ++r.constructible_count;
    if (by_form != criterion::phi_is_power_of_two(n)) r.disagreements.push_back(n);
  }
  return r;
}

SweepResult criterion_sweep_omp(std::uint64_t n_max) {
  std::vector<std::uint8_t> form(n_max + 1, 0), phi(n_max + 1, 0);
  const auto last = static_cast<std::int64_t>(n_max);
#pragma omp parallel for schedule(dynamic, 1024)
  for (std::int64_t n = 1; n <= last; ++n) {
    const auto u = static_cast<std::uint64_t>(n);
    form[u] = criterion::is_constructible(u).constructible;
    phi[u] = criterion::phi_is_power_of_two(u);
  }
  SweepResult r;
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    r.constructible_count += form[n];
    if (form[n] != phi[n]) r.disagreements.push_back(n);
  }
  return r;
}

std::vector<num::DyadicInterval> two_cos_enclosures_serial(const num::TrigEvaluator& trig,
                                                           std::span<const std::uint64_t> residues,
                                                           std::uint64_t p) {
  std::vector<num::DyadicInterval> out;
  out.reserve(residues.size());
  for (auto s : residues) {
    out.push_back(num::scale_pow2(trig.cos_two_pi(static_cast<std::int64_t>(s), p), 1));
  }
  return out;
}

std::vector<num::DyadicInterval> two_cos_enclosures_omp(const num::TrigEvaluator& trig,
                                                        std::span<const std::uint64_t> residues,
                                                        std::uint64_t p) {
  std::vector<num::DyadicInterval> out(residues.size());
  const auto count = static_cast<std::int64_t>(residues.size());
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t i = 0; i < count; ++i) {
    const auto s = residues[static_cast<std::size_t>(i)];
    out[static_cast<std::size_t>(i)] =
        num::scale_pow2(trig.cos_two_pi(static_cast<std::int64_t>(s), p), 1);
  }
  return out;
}

void set_jobs(int jobs) {
#ifdef _OPENMP
  static const int default_threads = omp_get_max_threads();
  omp_set_num_threads(jobs > 0 ? jobs : default_threads);
#else
  (void)jobs;
#endif
}

int max_jobs() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace gauss::kernels
