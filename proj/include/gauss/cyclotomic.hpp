#pragma once

// Exact arithmetic in Z[x]/Phi_p(x) for prime p, with eps = x a primitive
// p-th root of unity. Elements are stored in the basis 1, eps, ..., eps^(p-2);
// eps^(p-1) is rewritten as -(1 + eps + ... + eps^(p-2)). Because Phi_p is
// irreducible, equality of elements is coefficient equality.

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gauss/numkernel.hpp"

namespace gauss::cyclo {

using num::BigInt;

class CycloElement {
 public:
  // Zero element. Throws NotPrime.
  explicit CycloElement(std::uint64_t p);

  static CycloElement constant(std::uint64_t p, const BigInt& c);
  static CycloElement epsilon_power(std::uint64_t p, std::uint64_t e);
  static CycloElement from_exponents(std::uint64_t p, std::span<const std::uint64_t> exponents);
  // Coefficients in the reduced basis; length must be p - 1.
  static CycloElement from_coeffs(std::uint64_t p, std::vector<BigInt> coeffs);
  // Reduce a group-ring vector (coefficient of eps^i for i < p).
  static CycloElement from_group_ring(std::uint64_t p, std::span<const BigInt> c);

  std::uint64_t p() const { return p_; }
  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  bool is_zero() const;

  // Coefficient vector of length p with eps^(p-1) coefficient 0.
  std::vector<BigInt> group_ring() const;

  friend bool operator==(const CycloElement&, const CycloElement&) = default;

 private:
  CycloElement(std::uint64_t p, std::vector<BigInt> coeffs, int);

  std::uint64_t p_;
  std::vector<BigInt> coeffs_;
};

CycloElement cyclo_add(const CycloElement& a, const CycloElement& b);
CycloElement cyclo_sub(const CycloElement& a, const CycloElement& b);
CycloElement cyclo_scale(const CycloElement& a, const BigInt& k);
// Schoolbook product through the parallel convolution kernel.
CycloElement cyclo_mul(const CycloElement& a, const CycloElement& b);
// Same product through the serial reference kernel.
CycloElement cyclo_mul_serial(const CycloElement& a, const CycloElement& b);

inline CycloElement operator+(const CycloElement& a, const CycloElement& b) { return cyclo_add(a, b); }
inline CycloElement operator-(const CycloElement& a, const CycloElement& b) { return cyclo_sub(a, b); }
inline CycloElement operator*(const CycloElement& a, const CycloElement& b) { return cyclo_mul(a, b); }

// c if a == c * 1, otherwise nullopt.
std::optional<BigInt> is_rational_constant(const CycloElement& a);

// Bit-string index of a Gaussian period: bits()[j] is i_j, value is
// sum i_j 2^j. The empty label is the root (all nonzero residues).
class Label {
 public:
  Label() = default;
  explicit Label(std::string bits);
  static Label from_value(std::uint64_t value, std::size_t length);

  const std::string& bits() const { return bits_; }
  std::size_t size() const { return bits_.size(); }
  std::uint64_t value() const;
  Label child(int bit) const { return Label(bits_ + (bit ? '1' : '0')); }
  Label parent() const { return Label(bits_.substr(0, bits_.size() - 1)); }
  // "A" for the root, "A_01" otherwise.
  std::string name() const { return bits_.empty() ? "A" : "A_" + bits_; }

  friend auto operator<=>(const Label& a, const Label& b) {
    if (auto c = a.bits_.size() <=> b.bits_.size(); c != 0) return c;
    return a.bits_ <=> b.bits_;
  }
  friend bool operator==(const Label&, const Label&) = default;

 private:
  std::string bits_;
};

// eps exponents g^e mod p for e in [0, p-1) with e = residue (mod stride).
// stride must divide p - 1.
std::vector<std::uint64_t> class_exponents(std::uint64_t p, std::uint64_t g, std::uint64_t stride,
                                           std::uint64_t residue);

// Gaussian period sum of eps^(g^e) over e = residue (mod stride). Works for
// any prime p and stride dividing p - 1 (e.g. the three periods for p = 13).
CycloElement period_by_class(std::uint64_t p, std::uint64_t g, std::uint64_t stride,
                             std::uint64_t residue);

// Period A_w for a Fermat prime p = 2^m + 1 with |w| = level + 1 and
// 0 <= level <= m - 1: exponents e = value(w) (mod 2^(level+1)).
// Throws NotFermatPrime, BadLevel.
CycloElement period_element(std::uint64_t p, std::uint64_t g, unsigned level, const Label& w);

// log2(p - 1) for a Fermat prime; throws NotFermatPrime.
unsigned fermat_exponent(std::uint64_t p);

struct ComplexEnclosure {
  num::DyadicInterval re;
  num::DyadicInterval im;
};

// Substitute enclosures of cos and sin of 2*pi*i/p for eps^i.
ComplexEnclosure evaluate(const CycloElement& a, const num::TrigEvaluator& trig);

}  // namespace gauss::cyclo
