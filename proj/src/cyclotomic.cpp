#include "gauss/cyclotomic.hpp"

#include <bit>
#include <stdexcept>

#include "gauss/error.hpp"
#include "gauss/kernels.hpp"
#include "gauss/modular.hpp"

namespace gauss::cyclo {

namespace {

void require_same_modulus(const CycloElement& a, const CycloElement& b) {
  if (a.p() != b.p()) {
    throw Error(ErrorKind::ModulusMismatch,
                "p = " + std::to_string(a.p()) + " vs p = " + std::to_string(b.p()));
  }
}

}  // namespace

CycloElement::CycloElement(std::uint64_t p) : p_(p) {
  if (!modular::is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  coeffs_.assign(p - 1, BigInt(0));
}

CycloElement::CycloElement(std::uint64_t p, std::vector<BigInt> coeffs, int)
    : p_(p), coeffs_(std::move(coeffs)) {}

CycloElement CycloElement::constant(std::uint64_t p, const BigInt& c) {
  CycloElement out(p);
  out.coeffs_[0] = c;
  return out;
}

CycloElement CycloElement::epsilon_power(std::uint64_t p, std::uint64_t e) {
  const std::uint64_t exps[1] = {e};
  return from_exponents(p, exps);
}

CycloElement CycloElement::from_exponents(std::uint64_t p, std::span<const std::uint64_t> exponents) {
  CycloElement out(p);
  BigInt top = 0;
  for (auto e : exponents) {
    const auto r = e % p;
    if (r == p - 1) {
      top += 1;
    } else {
      out.coeffs_[r] += 1;
    }
  }
  if (top != 0) {
    for (auto& c : out.coeffs_) c -= top;
  }
  return out;
}

CycloElement CycloElement::from_coeffs(std::uint64_t p, std::vector<BigInt> coeffs) {
  CycloElement out(p);
  if (coeffs.size() != p - 1) throw std::invalid_argument("CycloElement: need p - 1 coefficients");
  out.coeffs_ = std::move(coeffs);
  return out;
}

CycloElement CycloElement::from_group_ring(std::uint64_t p, std::span<const BigInt> c) {
  if (c.size() != p) throw std::invalid_argument("CycloElement: need p group-ring coefficients");
  std::vector<BigInt> coeffs(p - 1);
  for (std::size_t i = 0; i + 1 < p; ++i) coeffs[i] = c[i] - c[p - 1];
  return CycloElement(p, std::move(coeffs), 0);
}

bool CycloElement::is_zero() const {
  for (const auto& c : coeffs_) {
    if (c != 0) return false;
  }
  return true;
}

std::vector<BigInt> CycloElement::group_ring() const {
  std::vector<BigInt> out(coeffs_);
  out.emplace_back(0);
  return out;
}

CycloElement cyclo_add(const CycloElement& a, const CycloElement& b) {
  require_same_modulus(a, b);
  std::vector<BigInt> c(a.coeffs());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += b.coeffs()[i];
  return CycloElement::from_coeffs(a.p(), std::move(c));
}

CycloElement cyclo_sub(const CycloElement& a, const CycloElement& b) {
  require_same_modulus(a, b);
  std::vector<BigInt> c(a.coeffs());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] -= b.coeffs()[i];
  return CycloElement::from_coeffs(a.p(), std::move(c));
}

CycloElement cyclo_scale(const CycloElement& a, const BigInt& k) {
  std::vector<BigInt> c(a.coeffs());
  for (auto& x : c) x *= k;
  return CycloElement::from_coeffs(a.p(), std::move(c));
}

CycloElement cyclo_mul(const CycloElement& a, const CycloElement& b) {
  require_same_modulus(a, b);
  const auto ga = a.group_ring(), gb = b.group_ring();
  return CycloElement::from_group_ring(a.p(), kernels::cyclic_convolve_omp(ga, gb));
}

CycloElement cyclo_mul_serial(const CycloElement& a, const CycloElement& b) {
  require_same_modulus(a, b);
  const auto ga = a.group_ring(), gb = b.group_ring();
  return CycloElement::from_group_ring(a.p(), kernels::cyclic_convolve_serial(ga, gb));
}

std::optional<BigInt> is_rational_constant(const CycloElement& a) {
  for (std::size_t i = 1; i < a.coeffs().size(); ++i) {
    if (a.coeffs()[i] != 0) return std::nullopt;
  }
  return a.coeffs().empty() ? BigInt(0) : a.coeffs()[0];
}

// ----------------------------------------------------------------- Label

Label::Label(std::string bits) : bits_(std::move(bits)) {
  for (char c : bits_) {
    if (c != '0' && c != '1') throw std::invalid_argument("Label: bits must be 0/1");
  }
}

Label Label::from_value(std::uint64_t value, std::size_t length) {
  std::string bits(length, '0');
  for (std::size_t j = 0; j < length; ++j) bits[j] = ((value >> j) & 1) ? '1' : '0';
  return Label(std::move(bits));
}

std::uint64_t Label::value() const {
  std::uint64_t v = 0;
  for (std::size_t j = 0; j < bits_.size(); ++j) {
    if (bits_[j] == '1') v |= std::uint64_t{1} << j;
  }
  return v;
}

// --------------------------------------------------------------- periods

std::vector<std::uint64_t> class_exponents(std::uint64_t p, std::uint64_t g, std::uint64_t stride,
                                           std::uint64_t residue) {
  if (stride == 0 || (p - 1) % stride != 0) {
    throw std::invalid_argument("class_exponents: stride must divide p - 1");
  }
  std::vector<std::uint64_t> out;
  out.reserve((p - 1) / stride);
  const std::uint64_t step = modular::mod_pow(static_cast<std::int64_t>(g), stride, p);
  std::uint64_t x = modular::mod_pow(static_cast<std::int64_t>(g), residue % stride, p);
  for (std::uint64_t e = residue % stride; e < p - 1; e += stride) {
    out.push_back(x);
    x = static_cast<std::uint64_t>(static_cast<unsigned __int128>(x) * step % p);
  }
  return out;
}

CycloElement period_by_class(std::uint64_t p, std::uint64_t g, std::uint64_t stride,
                             std::uint64_t residue) {
  return CycloElement::from_exponents(p, class_exponents(p, g, stride, residue));
}

unsigned fermat_exponent(std::uint64_t p) {
  if (!modular::is_fermat_prime(p)) {
    throw Error(ErrorKind::NotFermatPrime, std::to_string(p) + " is not a Fermat prime");
  }
  return static_cast<unsigned>(std::countr_zero(p - 1));
}

CycloElement period_element(std::uint64_t p, std::uint64_t g, unsigned level, const Label& w) {
  const unsigned m = fermat_exponent(p);
  if (level >= m) {
    throw Error(ErrorKind::BadLevel,
                "level " + std::to_string(level) + " outside [0, " + std::to_string(m - 1) + "]");
  }
  if (w.size() != level + 1) {
    throw Error(ErrorKind::BadLevel, "label " + w.bits() + " has length " +
                                         std::to_string(w.size()) + ", expected " +
                                         std::to_string(level + 1));
  }
  return period_by_class(p, g, std::uint64_t{1} << (level + 1), w.value());
}

ComplexEnclosure evaluate(const CycloElement& a, const num::TrigEvaluator& trig) {
  const num::Precision prec{trig.precision().bits + 16};
  num::DyadicInterval re, im;
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    const auto& c = a.coeffs()[i];
    if (c == 0) continue;
    const num::DyadicInterval k(num::Dyadic(c, 0));
    re = num::add(re, num::mul(k, trig.cos_two_pi(static_cast<std::int64_t>(i), a.p()), prec), prec);
    im = num::add(im, num::mul(k, trig.sin_two_pi(static_cast<std::int64_t>(i), a.p()), prec), prec);
  }
  return {re, im};
}

}  // namespace gauss::cyclo
