#include "gauss/witness.hpp"

#include <algorithm>
#include <set>

#include "gauss/error.hpp"
#include "gauss/modular.hpp"

namespace gauss::witness {

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs)
    : IntPolynomial(std::vector<BigInt>(coeffs.begin(), coeffs.end())) {}

BigRational IntPolynomial::evaluate(const BigRational& x) const {
  BigRational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + BigRational(*it);
  return acc;
}

std::string IntPolynomial::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const BigInt& c = coeffs_[i];
    if (c == 0) continue;
    const BigInt mag = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (mag != 1 || i == 0) out += mag.get_str();
    if (i >= 1) out += "x";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

IntPolynomial primitive_part(const std::vector<BigRational>& coeffs) {
  BigInt den = 1;
  for (const auto& q : coeffs) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
  std::vector<BigInt> ints;
  ints.reserve(coeffs.size());
  BigInt content = 0;
  for (const auto& q : coeffs) {
    BigInt v = q.get_num() * (den / q.get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
    ints.push_back(std::move(v));
  }
  IntPolynomial f(ints);
  if (f.is_zero()) return f;
  if (f.leading() < 0) content = -content;
  for (auto& v : ints) v /= content;
  return IntPolynomial(std::move(ints));
}

namespace {

std::vector<BigInt> positive_divisors(BigInt n) {
  n = abs(n);
  // Divisors from the factorization; constant terms here fit easily.
  if (n.fits_ulong_p()) {
    std::vector<BigInt> out{1};
    for (const auto& [q, k] : modular::factorize(n.get_ui())) {
      const std::size_t base = out.size();
      BigInt pk = 1;
      for (unsigned e = 1; e <= k; ++e) {
        pk *= static_cast<unsigned long>(q);
        for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
      }
    }
    return out;
  }
  std::vector<BigInt> out;
  BigInt d = 1;
  for (; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      if (d * d != n) out.push_back(n / d);
    }
  }
  return out;
}

}  // namespace

std::vector<BigRational> rational_roots(const IntPolynomial& f) {
  if (f.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "rational_roots of 0");
  std::set<BigRational> roots;
  // Strip the factor x^k first so the constant term is nonzero.
  std::size_t shift = 0;
  while (f.coeffs()[shift] == 0) ++shift;
  if (shift > 0) roots.insert(BigRational(0));
  const IntPolynomial g(std::vector<BigInt>(f.coeffs().begin() + static_cast<std::ptrdiff_t>(shift),
                                            f.coeffs().end()));
  if (g.degree() >= 1) {
    const auto nums = positive_divisors(g.coeffs().front());
    const auto dens = positive_divisors(g.leading());
    for (const auto& a : nums) {
      for (const auto& b : dens) {
        for (int sign : {1, -1}) {
          const BigRational r = num::make_rational(a * sign, b);
          if (g.evaluate(r) == 0) roots.insert(r);
        }
      }
    }
  }
  return {roots.rbegin(), roots.rend()};
}

bool cubic_constructible(const IntPolynomial& f) {
  if (f.degree() != 3) {
    throw Error(ErrorKind::BadDegree, "expected a cubic, got degree " + std::to_string(f.degree()));
  }
  return !rational_roots(f).empty();
}

bool eisenstein_check(const IntPolynomial& f, std::uint64_t q) {
  if (f.degree() < 1) return false;
  const BigInt bq(static_cast<unsigned long>(q));
  if (f.leading() % bq == 0) return false;
  for (int i = 0; i < f.degree(); ++i) {
    if (f.coeffs()[static_cast<std::size_t>(i)] % bq != 0) return false;
  }
  return f.coeffs().front() % (bq * bq) != 0;
}

IntPolynomial cyclotomic_poly(std::uint64_t p, bool square) {
  if (!modular::is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  const std::uint64_t step = square ? p : 1;
  std::vector<BigInt> c(static_cast<std::size_t>((p - 1) * step + 1), BigInt(0));
  for (std::uint64_t i = 0; i < p; ++i) c[static_cast<std::size_t>(i * step)] = 1;
  return IntPolynomial(std::move(c));
}

IntPolynomial shift_by_one(const IntPolynomial& f) {
  // Taylor shift by repeated synthetic division: Horner in place.
  std::vector<BigInt> c = f.coeffs();
  const std::size_t n = c.size();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t j = n - 1; j-- > i;) c[j] += c[j + 1];
  }
  return IntPolynomial(std::move(c));
}

}  // namespace gauss::witness
