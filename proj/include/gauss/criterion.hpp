#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gauss/modular.hpp"

namespace gauss::criterion {

enum class ObstructionKind {
  NonFermatPrime,  // odd prime factor not of the form 2^(2^s) + 1
  RepeatedPrime,   // Fermat prime dividing n more than once
};

struct Obstruction {
  std::uint64_t prime;
  unsigned multiplicity;
  ObstructionKind kind;

  friend bool operator==(const Obstruction&, const Obstruction&) = default;
};

struct ConstructibilityVerdict {
  std::uint64_t n = 1;
  bool constructible = true;
  unsigned two_power_part = 0;
  // Distinct Fermat primes dividing n, ascending.
  std::vector<std::uint64_t> fermat_prime_factors;
  modular::Factorization factorization;
  // Smallest failing odd prime; present iff !constructible.
  std::optional<Obstruction> obstruction;
};

// Regular n-gon constructible iff n = 2^a * (distinct Fermat primes).
ConstructibilityVerdict is_constructible(std::uint64_t n);

std::uint64_t euler_phi(std::uint64_t n);

// The totient-side decider: phi(n) is a power of two.
bool phi_is_power_of_two(std::uint64_t n);

std::string describe(const Obstruction& o);

}  // namespace gauss::criterion
