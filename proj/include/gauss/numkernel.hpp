#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <string>

namespace gauss::num {

using BigInt = mpz_class;
// gmpxx keeps mpq values canonical (den > 0, gcd 1) after every arithmetic
// operation; make_rational() is the only entry point that needs to reduce.
using BigRational = mpq_class;

BigRational make_rational(const BigInt& numerator, const BigInt& denominator);
std::string to_string(const BigInt& value);
std::string to_string(const BigRational& value);

// Bits of relative width carried by interval endpoints.
struct Precision {
  unsigned bits = 128;

  Precision doubled() const { return Precision{bits * 2}; }
  friend auto operator<=>(const Precision&, const Precision&) = default;
};

inline constexpr Precision kDefaultPrecision{128};

enum class Rounding { Down, Up };

// mantissa * 2^exponent, canonical when the mantissa is odd or zero
// (zero has exponent 0).
class Dyadic {
 public:
  Dyadic() = default;
  Dyadic(BigInt mantissa, std::int64_t exponent);
  explicit Dyadic(long value) : Dyadic(BigInt(value), 0) {}

  // Nearest dyadic with at most `bits` significant bits in the given
  // direction.
  static Dyadic from_rational(const BigRational& value, unsigned bits,
                              Rounding dir);

  const BigInt& mantissa() const { return mantissa_; }
  std::int64_t exponent() const { return exponent_; }
  int sign() const { return sgn(mantissa_); }
  bool is_zero() const { return mantissa_ == 0; }

  BigRational to_rational() const;
  double to_double() const;
  // floor(log2 |x|); undefined for zero.
  std::int64_t magnitude() const;

  Dyadic rounded(unsigned bits, Rounding dir) const;

  Dyadic operator-() const { return Dyadic(-mantissa_, exponent_); }
  friend Dyadic operator+(const Dyadic& a, const Dyadic& b);
  friend Dyadic operator-(const Dyadic& a, const Dyadic& b);
  friend Dyadic operator*(const Dyadic& a, const Dyadic& b);
  // Exact scaling by 2^shift.
  Dyadic ldexp(std::int64_t shift) const;

  friend std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b);
  friend bool operator==(const Dyadic& a, const Dyadic& b) {
    return a.exponent_ == b.exponent_ && a.mantissa_ == b.mantissa_;
  }

 private:
  void canonicalize();

  BigInt mantissa_ = 0;
  std::int64_t exponent_ = 0;
};

// Quotient a/b rounded to `bits` significant bits in direction `dir`.
Dyadic divide(const Dyadic& a, const Dyadic& b, unsigned bits, Rounding dir);

// Square root of a nonnegative dyadic rounded to `bits` significant bits.
Dyadic sqrt(const Dyadic& a, unsigned bits, Rounding dir);

std::string to_decimal(const Dyadic& value, unsigned digits, Rounding dir);

class DyadicInterval {
 public:
  DyadicInterval() = default;
  explicit DyadicInterval(const Dyadic& point) : lo_(point), hi_(point) {}
  DyadicInterval(Dyadic lo, Dyadic hi);

  static DyadicInterval from_rational(const BigRational& value, Precision prec);
  static DyadicInterval from_int(long value) {
    return DyadicInterval(Dyadic(value));
  }

  const Dyadic& lo() const { return lo_; }
  const Dyadic& hi() const { return hi_; }
  Dyadic width() const { return hi_ - lo_; }
  bool is_point() const { return lo_ == hi_; }

  bool contains(const Dyadic& x) const { return lo_ <= x && x <= hi_; }
  bool contains(const BigRational& x) const;
  bool contains(const DyadicInterval& other) const {
    return lo_ <= other.lo_ && other.hi_ <= hi_;
  }
  bool contains_zero() const { return lo_.sign() <= 0 && hi_.sign() >= 0; }
  bool intersects(const DyadicInterval& other) const {
    return !(hi_ < other.lo_ || other.hi_ < lo_);
  }
  std::optional<DyadicInterval> intersect(const DyadicInterval& other) const;
  // Interval hull; used to widen by remainder terms.
  DyadicInterval hull(const DyadicInterval& other) const;
  // max(|lo|, |hi|)
  Dyadic magnitude() const;

  DyadicInterval operator-() const { return DyadicInterval(-hi_, -lo_); }

  friend bool operator==(const DyadicInterval&, const DyadicInterval&) = default;

 private:
  Dyadic lo_;
  Dyadic hi_;
};

enum class ArithOp { Add, Sub, Mul, Div };

// Outward-rounded interval operations. Results always contain the exact
// set {x op y}.
DyadicInterval add(const DyadicInterval& a, const DyadicInterval& b,
                   Precision prec);
DyadicInterval sub(const DyadicInterval& a, const DyadicInterval& b,
                   Precision prec);
DyadicInterval mul(const DyadicInterval& a, const DyadicInterval& b,
                   Precision prec);
DyadicInterval div(const DyadicInterval& a, const DyadicInterval& b,
                   Precision prec);
DyadicInterval interval_arith(const DyadicInterval& a, const DyadicInterval& b,
                              ArithOp op, Precision prec);
DyadicInterval interval_sqrt(const DyadicInterval& a, Precision prec);

// Exact scaling helpers (no rounding needed).
DyadicInterval scale_pow2(const DyadicInterval& a, std::int64_t shift);

std::string format_interval(const DyadicInterval& x, unsigned digits = 20);

// Rigorous enclosure of pi via Machin's formula, width <= 2^(1-prec).
DyadicInterval pi_enclosure(Precision prec);

// Holds a pi enclosure at 2*prec bits so repeated cosine evaluations at the
// same precision share it. Immutable after construction.
class TrigEvaluator {
 public:
  explicit TrigEvaluator(Precision prec = kDefaultPrecision);

  Precision precision() const { return prec_; }
  const DyadicInterval& pi() const { return pi_; }

  // Enclosures of cos(2*pi*k/n) and sin(2*pi*k/n), width <= 2^(1-prec).
  DyadicInterval cos_two_pi(std::int64_t k, std::uint64_t n) const;
  DyadicInterval sin_two_pi(std::int64_t k, std::uint64_t n) const;

 private:
  // cos or sin of 2*pi*r for rational r in [0, 1/8].
  DyadicInterval cos_reduced(const BigRational& r) const;
  DyadicInterval sin_reduced(const BigRational& r) const;
  DyadicInterval angle_of(const BigRational& r) const;
  DyadicInterval cos_series_at(const Dyadic& x) const;
  DyadicInterval sin_series_at(const Dyadic& x) const;

  Precision prec_;
  unsigned work_bits_;
  DyadicInterval pi_;
};

DyadicInterval cos_two_pi(std::int64_t k, std::uint64_t n,
                          Precision prec = kDefaultPrecision);

}  // namespace gauss::num
