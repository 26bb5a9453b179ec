#include "gauss/modular.hpp"

#include <array>
#include <string>

#include "gauss/error.hpp"

namespace gauss::modular {

namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod_unchecked(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

constexpr std::array<std::uint64_t, 12> kWitnesses = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

bool strong_probable_prime(std::uint64_t n, std::uint64_t a) {
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  std::uint64_t x = pow_mod_unchecked(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (unsigned r = 1; r < s; ++r) {
    x = mul_mod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

// Gaps between successive integers coprime to 30, starting at 7.
constexpr std::array<std::uint64_t, 8> kWheel = {4, 2, 4, 2, 4, 6, 2, 6};

}  // namespace

std::uint64_t mod_pow(std::int64_t base, std::uint64_t exp, std::uint64_t m) {
  if (m < 2) throw Error(ErrorKind::BadModulus, "modulus " + std::to_string(m) + " < 2");
  std::uint64_t b;
  if (base >= 0) {
    b = static_cast<std::uint64_t>(base) % m;
  } else {
    // -(|base| mod m) taken back into [0, m)
    const std::uint64_t mag = static_cast<std::uint64_t>(-(base + 1)) + 1;
    b = (m - mag % m) % m;
  }
  return pow_mod_unchecked(b, exp, m);
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : kWitnesses) {
    if (n % p == 0) return n == p;
  }
  if (n < 41 * 41) return true;
  for (std::uint64_t a : kWitnesses) {
    if (!strong_probable_prime(n, a)) return false;
  }
  return true;
}

Factorization factorize(std::uint64_t n) {
  if (n == 0) throw Error(ErrorKind::BadModulus, "factorize(0)");
  Factorization out;
  auto take = [&](std::uint64_t p) {
    unsigned k = 0;
    while (n % p == 0) {
      n /= p;
      ++k;
    }
    if (k > 0) out.push_back({p, k});
  };
  take(2);
  take(3);
  take(5);
  std::uint64_t d = 7;
  for (std::size_t i = 0; d <= n / d; d += kWheel[i], i = (i + 1) % kWheel.size()) {
    take(d);
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

std::uint64_t recompose(const Factorization& f) {
  std::uint64_t n = 1;
  for (const auto& [p, k] : f) {
    for (unsigned i = 0; i < k; ++i) n *= p;
  }
  return n;
}

bool is_fermat_prime(std::uint64_t p) {
  return p >= 3 && is_power_of_two(p - 1) && is_prime(p);
}

std::uint64_t primitive_root(std::uint64_t p) {
  if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  if (p == 2) return 1;
  const Factorization f = factorize(p - 1);
  for (std::uint64_t g = 2;; ++g) {
    bool generator = true;
    for (const auto& [q, k] : f) {
      if (pow_mod_unchecked(g, (p - 1) / q, p) == 1) {
        generator = false;
        break;
      }
    }
    if (generator) return g;
  }
}

}  // namespace gauss::modular
