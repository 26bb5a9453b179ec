#include <doctest.h>

#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "gauss/error.hpp"
#include "gauss/modular.hpp"

using namespace gauss;
using namespace gauss::modular;

namespace {

std::vector<bool> sieve(std::size_t n) {
  std::vector<bool> prime(n + 1, true);
  prime[0] = false;
  if (n >= 1) prime[1] = false;
  for (std::size_t i = 2; i * i <= n; ++i) {
    if (!prime[i]) continue;
    for (std::size_t j = i * i; j <= n; j += i) prime[j] = false;
  }
  return prime;
}

std::uint64_t order(std::uint64_t g, std::uint64_t p) {
  std::uint64_t x = g % p, k = 1;
  while (x != 1) {
    x = x * g % p;
    ++k;
  }
  return k;
}

}  // namespace

TEST_CASE("mod_pow") {
  CHECK(mod_pow(2, 8, 17) == 1);
  CHECK(mod_pow(3, 1u << 15, 65537) == 65536);
  CHECK(mod_pow(-2, 3, 7) == 6);
  CHECK(mod_pow(5, 0, 7) == 1);
  CHECK(mod_pow(0, 0, 7) == 1);
  CHECK(mod_pow(123456789, 1, 2) == 1);
  const std::uint64_t big = 18446744073709551557ULL;  // largest 64-bit prime
  CHECK(mod_pow(2, big - 1, big) == 1);
  for (std::uint64_t m : {0ULL, 1ULL}) {
    try {
      (void)mod_pow(2, 3, m);
      FAIL("expected BadModulus");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::BadModulus);
    }
  }
}

TEST_CASE("is_prime agrees with a sieve") {
  const auto prime = sieve(200000);
  for (std::uint64_t n = 0; n <= 200000; ++n) {
    if (is_prime(n) != prime[n]) FAIL("is_prime(" << n << ")");
  }
}

TEST_CASE("is_prime on large and adversarial inputs") {
  CHECK(is_prime((1ULL << 61) - 1));
  CHECK(is_prime(18446744073709551557ULL));
  CHECK(is_prime(65537));
  CHECK_FALSE(is_prime(4294967297ULL));  // 641 * 6700417
  CHECK_FALSE(is_prime(561));
  CHECK_FALSE(is_prime(3215031751ULL));
  CHECK_FALSE(is_prime(3825123056546413051ULL));
  CHECK_FALSE(is_prime(18446744073709551615ULL));
}

TEST_CASE("factorize") {
  CHECK(factorize(1).empty());
  CHECK(factorize(4294967297ULL) == Factorization{{641, 1}, {6700417, 1}});
  CHECK(factorize(289) == Factorization{{17, 2}});
  CHECK(factorize(60) == Factorization{{2, 2}, {3, 1}, {5, 1}});
  CHECK(factorize(1ULL << 63) == Factorization{{2, 63}});
  try {
    (void)factorize(0);
    FAIL("expected BadModulus");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::BadModulus);
  }
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<std::uint64_t> dist(2, 1ULL << 40);
  for (int i = 0; i < 300; ++i) {
    const auto n = dist(rng);
    const auto f = factorize(n);
    CHECK(recompose(f) == n);
    for (std::size_t j = 0; j < f.size(); ++j) {
      CHECK(is_prime(f[j].prime));
      if (j > 0) CHECK(f[j - 1].prime < f[j].prime);
    }
  }
}

TEST_CASE("Fermat primes") {
  std::vector<std::uint64_t> found;
  for (std::uint64_t k = 0; k < 63; ++k) {
    if (is_fermat_prime((1ULL << k) + 1)) found.push_back((1ULL << k) + 1);
  }
  CHECK(found == std::vector<std::uint64_t>{3, 5, 17, 257, 65537});
  CHECK_FALSE(is_fermat_prime(2));
  CHECK_FALSE(is_fermat_prime(9));
  CHECK_FALSE(is_fermat_prime(7));
}

TEST_CASE("primitive roots") {
  CHECK(primitive_root(13) == 2);
  CHECK(primitive_root(17) == 3);
  CHECK(primitive_root(257) == 3);
  CHECK(primitive_root(65537) == 3);
  CHECK(primitive_root(7) == 3);
  CHECK(primitive_root(3) == 2);
  CHECK(primitive_root(5) == 2);
  CHECK(primitive_root(2) == 1);
  try {
    (void)primitive_root(15);
    FAIL("expected NotPrime");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotPrime);
  }
}

TEST_CASE("primitive root powers are distinct and the root is smallest, p < 10^4") {
  const auto prime = sieve(10000);
  for (std::uint64_t p = 3; p <= 10000; ++p) {
    if (!prime[p]) continue;
    const auto g = primitive_root(p);
    std::vector<bool> hit(p, false);
    std::uint64_t x = 1;
    for (std::uint64_t k = 1; k < p; ++k) {
      x = x * g % p;
      if (hit[x]) FAIL("repeated power of " << g << " mod " << p);
      hit[x] = true;
    }
    for (std::uint64_t h = 2; h < g; ++h) {
      if (order(h, p) == p - 1) FAIL(h << " is a smaller primitive root mod " << p);
    }
  }
}

TEST_CASE("3 generates the units mod the known Fermat primes above 3") {
  for (std::uint64_t p : {5ULL, 17ULL, 257ULL, 65537ULL}) {
    CAPTURE(p);
    CHECK(order(3, p) == p - 1);
  }
}
