#include "gauss/criterion.hpp"

#include <stdexcept>

namespace gauss::criterion {

ConstructibilityVerdict is_constructible(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("is_constructible: n must be positive");
  ConstructibilityVerdict v;
  v.n = n;
  v.factorization = modular::factorize(n);
  for (const auto& [p, k] : v.factorization) {
    if (p == 2) {
      v.two_power_part = k;
      continue;
    }
    const bool fermat = modular::is_fermat_prime(p);
    if (fermat) v.fermat_prime_factors.push_back(p);
    if (v.obstruction) continue;
    if (!fermat) {
      v.obstruction = Obstruction{p, k, ObstructionKind::NonFermatPrime};
    } else if (k > 1) {
      v.obstruction = Obstruction{p, k, ObstructionKind::RepeatedPrime};
    }
  }
  v.constructible = !v.obstruction.has_value();
  return v;
}

std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t phi = 1;
  for (const auto& [p, k] : modular::factorize(n)) {
    phi *= p - 1;
    for (unsigned i = 1; i < k; ++i) phi *= p;
  }
  return phi;
}

bool phi_is_power_of_two(std::uint64_t n) { return modular::is_power_of_two(euler_phi(n)); }

std::string describe(const Obstruction& o) {
  std::string s = std::to_string(o.prime);
  if (o.multiplicity > 1) s += "^" + std::to_string(o.multiplicity);
  s += o.kind == ObstructionKind::NonFermatPrime ? " (odd prime not of the form 2^(2^s)+1)"
                                                 : " (Fermat prime repeated)";
  return s;
}

}  // namespace gauss::criterion
