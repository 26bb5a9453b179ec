#pragma once

#include <cstdint>
#include <vector>

namespace gauss::modular {

struct PrimePower {
  std::uint64_t prime;
  unsigned multiplicity;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// Primes strictly increasing; empty for n = 1.
using Factorization = std::vector<PrimePower>;

// base^exp mod m in [0, m). Throws BadModulus for m < 2.
std::uint64_t mod_pow(std::int64_t base, std::uint64_t exp, std::uint64_t m);

// Deterministic for every 64-bit input (trial division by small primes,
// then strong-pseudoprime tests to the first twelve prime bases).
bool is_prime(std::uint64_t n);

// Trial division with a mod-30 wheel.
Factorization factorize(std::uint64_t n);

std::uint64_t recompose(const Factorization& f);

// p prime and p - 1 a power of two.
bool is_fermat_prime(std::uint64_t p);

// Smallest g >= 2 whose order mod p is p - 1 (1 for p = 2). Throws NotPrime.
std::uint64_t primitive_root(std::uint64_t p);

// True iff n is a power of two (n >= 1).
constexpr bool is_power_of_two(std::uint64_t n) { return n != 0 && (n & (n - 1)) == 0; }

}  // namespace gauss::modular
