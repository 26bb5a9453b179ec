#pragma once

// Integer polynomials and the non-constructibility witnesses built on them:
// rational roots, the cubic test, and Eisenstein after the shift x -> x + 1.

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "gauss/numkernel.hpp"

namespace gauss::witness {

using num::BigInt;
using num::BigRational;

// coeffs()[i] is the coefficient of x^i; the zero polynomial is empty.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coeffs);
  IntPolynomial(std::initializer_list<long> coeffs);

  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const BigInt& leading() const { return coeffs_.back(); }
  BigInt operator[](std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigInt(0); }

  BigRational evaluate(const BigRational& x) const;
  std::string to_string() const;
  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

 private:
  std::vector<BigInt> coeffs_;
};

// Clears denominators and divides out the content; sign makes the leading
// coefficient positive.
IntPolynomial primitive_part(const std::vector<BigRational>& coeffs);

// Distinct rational roots in decreasing order. Throws ZeroPolynomial.
std::vector<BigRational> rational_roots(const IntPolynomial& f);

// A cubic's roots are constructible iff it has a rational root.
// Throws BadDegree unless deg f == 3.
bool cubic_constructible(const IntPolynomial& f);

// q does not divide the leading coefficient, divides every other one, and
// q^2 does not divide the constant term. False for constants.
bool eisenstein_check(const IntPolynomial& f, std::uint64_t q);

// Phi_p = sum_{i<p} x^i, or Phi_{p^2} = sum_{i<p} x^{ip}. Throws NotPrime.
IntPolynomial cyclotomic_poly(std::uint64_t p, bool square);

// f(x + 1).
IntPolynomial shift_by_one(const IntPolynomial& f);

}  // namespace gauss::witness
