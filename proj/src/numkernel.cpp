#include "gauss/numkernel.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "gauss/error.hpp"

namespace gauss::num {

namespace {

std::size_t bit_length(const BigInt& m) {
  return m == 0 ? 0 : mpz_sizeinbase(m.get_mpz_t(), 2);
}

BigInt shift_left(const BigInt& m, std::size_t bits) {
  BigInt out;
  mpz_mul_2exp(out.get_mpz_t(), m.get_mpz_t(), bits);
  return out;
}

}  // namespace

BigRational make_rational(const BigInt& numerator, const BigInt& denominator) {
  if (denominator == 0) {
    throw Error(ErrorKind::DivByZero, "rational with zero denominator");
  }
  BigRational q(numerator, denominator);
  q.canonicalize();
  return q;
}

std::string to_string(const BigInt& value) { return value.get_str(); }

std::string to_string(const BigRational& value) { return value.get_str(); }

// ---------------------------------------------------------------- Dyadic

Dyadic::Dyadic(BigInt mantissa, std::int64_t exponent)
    : mantissa_(std::move(mantissa)), exponent_(exponent) {
  canonicalize();
}

void Dyadic::canonicalize() {
  if (mantissa_ == 0) {
    exponent_ = 0;
    return;
  }
  const auto tz = mpz_scan1(mantissa_.get_mpz_t(), 0);
  if (tz > 0) {
    mpz_tdiv_q_2exp(mantissa_.get_mpz_t(), mantissa_.get_mpz_t(), tz);
    exponent_ += static_cast<std::int64_t>(tz);
  }
}

Dyadic Dyadic::from_rational(const BigRational& value, unsigned bits,
                             Rounding dir) {
  return divide(Dyadic(value.get_num(), 0), Dyadic(value.get_den(), 0), bits,
                dir);
}

BigRational Dyadic::to_rational() const {
  if (exponent_ >= 0) {
    return BigRational(shift_left(mantissa_, static_cast<std::size_t>(exponent_)));
  }
  BigRational q(mantissa_, shift_left(BigInt(1), static_cast<std::size_t>(-exponent_)));
  q.canonicalize();
  return q;
}

double Dyadic::to_double() const {
  long exp = 0;
  const double d = mpz_get_d_2exp(&exp, mantissa_.get_mpz_t());
  return std::ldexp(d, static_cast<int>(exp + exponent_));
}

std::int64_t Dyadic::magnitude() const {
  return static_cast<std::int64_t>(bit_length(abs(mantissa_))) - 1 + exponent_;
}

Dyadic Dyadic::rounded(unsigned bits, Rounding dir) const {
  const auto len = bit_length(abs(mantissa_));
  if (len <= bits) return *this;
  const auto shift = len - bits;
  BigInt m;
  if (dir == Rounding::Down) {
    mpz_fdiv_q_2exp(m.get_mpz_t(), mantissa_.get_mpz_t(), shift);
  } else {
    mpz_cdiv_q_2exp(m.get_mpz_t(), mantissa_.get_mpz_t(), shift);
  }
  return Dyadic(std::move(m), exponent_ + static_cast<std::int64_t>(shift));
}

Dyadic operator+(const Dyadic& a, const Dyadic& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  const auto e = std::min(a.exponent_, b.exponent_);
  return Dyadic(shift_left(a.mantissa_, static_cast<std::size_t>(a.exponent_ - e)) +
                    shift_left(b.mantissa_, static_cast<std::size_t>(b.exponent_ - e)),
                e);
}

Dyadic operator-(const Dyadic& a, const Dyadic& b) { return a + (-b); }

Dyadic operator*(const Dyadic& a, const Dyadic& b) {
  return Dyadic(a.mantissa_ * b.mantissa_, a.exponent_ + b.exponent_);
}

Dyadic Dyadic::ldexp(std::int64_t shift) const {
  return Dyadic(mantissa_, is_zero() ? 0 : exponent_ + shift);
}

std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b) {
  const int s = (a - b).sign();
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Dyadic divide(const Dyadic& a, const Dyadic& b, unsigned bits, Rounding dir) {
  if (b.is_zero()) throw Error(ErrorKind::DivByZero, "dyadic division by zero");
  if (a.is_zero()) return Dyadic();
  const auto la = static_cast<std::int64_t>(bit_length(abs(a.mantissa())));
  const auto lb = static_cast<std::int64_t>(bit_length(abs(b.mantissa())));
  const auto s = std::max<std::int64_t>(0, static_cast<std::int64_t>(bits) + 2 + lb - la);
  const BigInt num = shift_left(a.mantissa(), static_cast<std::size_t>(s));
  BigInt q;
  if (dir == Rounding::Down) {
    mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), b.mantissa().get_mpz_t());
  } else {
    mpz_cdiv_q(q.get_mpz_t(), num.get_mpz_t(), b.mantissa().get_mpz_t());
  }
  return Dyadic(std::move(q), a.exponent() - b.exponent() - s).rounded(bits, dir);
}

Dyadic sqrt(const Dyadic& a, unsigned bits, Rounding dir) {
  if (a.sign() < 0) throw Error(ErrorKind::NegativeRadicand, "sqrt of negative dyadic");
  if (a.is_zero()) return Dyadic();
  BigInt m = a.mantissa();
  std::int64_t e = a.exponent();
  if (e % 2 != 0) {
    m = shift_left(m, 1);
    e -= 1;
  }
  auto s = std::max<std::int64_t>(
      0, 2 * static_cast<std::int64_t>(bits) + 2 - static_cast<std::int64_t>(bit_length(m)));
  s += s & 1;
  m = shift_left(m, static_cast<std::size_t>(s));
  e -= s;
  BigInt root, rem;
  mpz_sqrtrem(root.get_mpz_t(), rem.get_mpz_t(), m.get_mpz_t());
  if (dir == Rounding::Up && rem != 0) root += 1;
  return Dyadic(std::move(root), e / 2).rounded(bits, dir);
}

std::string to_decimal(const Dyadic& value, unsigned digits, Rounding dir) {
  BigInt scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
  const BigRational scaled = value.to_rational() * BigRational(scale);
  BigInt n;
  if (dir == Rounding::Down) {
    mpz_fdiv_q(n.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
  } else {
    mpz_cdiv_q(n.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
  }
  const bool negative = n < 0;
  std::string s = BigInt(abs(n)).get_str();
  if (s.size() <= digits) s.insert(0, digits + 1 - s.size(), '0');
  if (digits > 0) s.insert(s.size() - digits, ".");
  return negative ? "-" + s : s;
}

// -------------------------------------------------------- DyadicInterval

DyadicInterval::DyadicInterval(Dyadic lo, Dyadic hi)
    : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (hi_ < lo_) throw std::invalid_argument("DyadicInterval: lo > hi");
}

DyadicInterval DyadicInterval::from_rational(const BigRational& value,
                                             Precision prec) {
  return DyadicInterval(Dyadic::from_rational(value, prec.bits, Rounding::Down),
                        Dyadic::from_rational(value, prec.bits, Rounding::Up));
}

bool DyadicInterval::contains(const BigRational& x) const {
  return lo_.to_rational() <= x && x <= hi_.to_rational();
}

std::optional<DyadicInterval> DyadicInterval::intersect(
    const DyadicInterval& other) const {
  if (!intersects(other)) return std::nullopt;
  return DyadicInterval(std::max(lo_, other.lo_), std::min(hi_, other.hi_));
}

DyadicInterval DyadicInterval::hull(const DyadicInterval& other) const {
  return DyadicInterval(std::min(lo_, other.lo_), std::max(hi_, other.hi_));
}

Dyadic DyadicInterval::magnitude() const { return std::max(-lo_, hi_); }

DyadicInterval add(const DyadicInterval& a, const DyadicInterval& b,
                   Precision prec) {
  return DyadicInterval((a.lo() + b.lo()).rounded(prec.bits, Rounding::Down),
                        (a.hi() + b.hi()).rounded(prec.bits, Rounding::Up));
}

DyadicInterval sub(const DyadicInterval& a, const DyadicInterval& b,
                   Precision prec) {
  return DyadicInterval((a.lo() - b.hi()).rounded(prec.bits, Rounding::Down),
                        (a.hi() - b.lo()).rounded(prec.bits, Rounding::Up));
}

DyadicInterval mul(const DyadicInterval& a, const DyadicInterval& b,
                   Precision prec) {
  if (a.is_point() && b.is_point()) {
    const Dyadic p = a.lo() * b.lo();
    return DyadicInterval(p.rounded(prec.bits, Rounding::Down),
                          p.rounded(prec.bits, Rounding::Up));
  }
  const Dyadic c[4] = {a.lo() * b.lo(), a.lo() * b.hi(), a.hi() * b.lo(),
                       a.hi() * b.hi()};
  const auto [mn, mx] = std::minmax_element(std::begin(c), std::end(c));
  return DyadicInterval(mn->rounded(prec.bits, Rounding::Down),
                        mx->rounded(prec.bits, Rounding::Up));
}

DyadicInterval div(const DyadicInterval& a, const DyadicInterval& b,
                   Precision prec) {
  if (b.contains_zero()) {
    throw Error(ErrorKind::DivByZeroInterval, "divisor interval contains 0");
  }
  Dyadic lo, hi;
  bool first = true;
  for (const Dyadic* x : {&a.lo(), &a.hi()}) {
    for (const Dyadic* y : {&b.lo(), &b.hi()}) {
      Dyadic d = divide(*x, *y, prec.bits, Rounding::Down);
      Dyadic u = divide(*x, *y, prec.bits, Rounding::Up);
      if (first || d < lo) lo = std::move(d);
      if (first || hi < u) hi = std::move(u);
      first = false;
    }
  }
  return DyadicInterval(std::move(lo), std::move(hi));
}

DyadicInterval interval_arith(const DyadicInterval& a, const DyadicInterval& b,
                              ArithOp op, Precision prec) {
  switch (op) {
    case ArithOp::Add: return add(a, b, prec);
    case ArithOp::Sub: return sub(a, b, prec);
    case ArithOp::Mul: return mul(a, b, prec);
    case ArithOp::Div: return div(a, b, prec);
  }
  throw std::logic_error("unknown ArithOp");
}

DyadicInterval interval_sqrt(const DyadicInterval& a, Precision prec) {
  if (a.lo().sign() < 0) {
    throw Error(ErrorKind::NegativeRadicand, "interval lower bound below zero");
  }
  return DyadicInterval(sqrt(a.lo(), prec.bits, Rounding::Down),
                        sqrt(a.hi(), prec.bits, Rounding::Up));
}

DyadicInterval scale_pow2(const DyadicInterval& a, std::int64_t shift) {
  return DyadicInterval(a.lo().ldexp(shift), a.hi().ldexp(shift));
}

std::string format_interval(const DyadicInterval& x, unsigned digits) {
  return "[" + to_decimal(x.lo(), digits, Rounding::Down) + ", " +
         to_decimal(x.hi(), digits, Rounding::Up) + "]";
}

// ------------------------------------------------------------------- pi

namespace {

// atan(1/x) = sum_j (-1)^j / ((2j+1) x^(2j+1)); alternating with
// decreasing terms, so the first omitted term bounds the tail.
DyadicInterval atan_inverse(unsigned long x, Precision prec) {
  const Dyadic cutoff = Dyadic(1).ldexp(-static_cast<std::int64_t>(prec.bits) - 4);
  const BigInt x2 = BigInt(x) * x;
  BigInt power = x;
  DyadicInterval sum;
  for (unsigned long j = 0;; ++j) {
    const DyadicInterval term =
        DyadicInterval::from_rational(make_rational(1, power * (2 * j + 1)), prec);
    if (term.hi() < cutoff) {
      return add(sum, DyadicInterval(-term.hi(), term.hi()), prec);
    }
    sum = (j % 2 == 0) ? add(sum, term, prec) : sub(sum, term, prec);
    power *= x2;
  }
}

}  // namespace

DyadicInterval pi_enclosure(Precision prec) {
  const Precision work{prec.bits + 16};
  const DyadicInterval a5 = scale_pow2(atan_inverse(5, work), 4);
  const DyadicInterval a239 = scale_pow2(atan_inverse(239, work), 2);
  return sub(a5, a239, Precision{prec.bits + 8});
}

// --------------------------------------------------------------- cosine

TrigEvaluator::TrigEvaluator(Precision prec)
    : prec_(prec),
      work_bits_(prec.bits + 32),
      pi_(pi_enclosure(Precision{2 * prec.bits + 32})) {}

DyadicInterval TrigEvaluator::angle_of(const BigRational& r) const {
  const Precision work{work_bits_};
  const DyadicInterval two_pi_num =
      scale_pow2(mul(pi_, DyadicInterval(Dyadic(r.get_num(), 0)), work), 1);
  return div(two_pi_num, DyadicInterval(Dyadic(r.get_den(), 0)), work);
}

DyadicInterval TrigEvaluator::cos_series_at(const Dyadic& x) const {
  const Precision work{work_bits_};
  const Dyadic cutoff = Dyadic(1).ldexp(-static_cast<std::int64_t>(work_bits_) - 2);
  const DyadicInterval x2 = mul(DyadicInterval(x), DyadicInterval(x), work);
  DyadicInterval term = DyadicInterval::from_int(1);
  DyadicInterval sum = term;
  for (long j = 1;; ++j) {
    term = div(mul(term, x2, work), DyadicInterval::from_int((2 * j - 1) * (2 * j)), work);
    if (term.hi() < cutoff) {
      return add(sum, DyadicInterval(-term.hi(), term.hi()), work);
    }
    sum = (j % 2 == 1) ? sub(sum, term, work) : add(sum, term, work);
  }
}

DyadicInterval TrigEvaluator::sin_series_at(const Dyadic& x) const {
  const Precision work{work_bits_};
  const Dyadic cutoff = Dyadic(1).ldexp(-static_cast<std::int64_t>(work_bits_) - 2);
  const DyadicInterval x2 = mul(DyadicInterval(x), DyadicInterval(x), work);
  DyadicInterval term(x);
  DyadicInterval sum = term;
  for (long j = 1;; ++j) {
    term = div(mul(term, x2, work), DyadicInterval::from_int((2 * j) * (2 * j + 1)), work);
    if (term.hi() < cutoff) {
      return add(sum, DyadicInterval(-term.hi(), term.hi()), work);
    }
    sum = (j % 2 == 1) ? sub(sum, term, work) : add(sum, term, work);
  }
}

// On [0, pi/4] cosine is decreasing and sine increasing, so endpoint
// evaluations bound the image of the angle interval.
DyadicInterval TrigEvaluator::cos_reduced(const BigRational& r) const {
  if (r == 0) return DyadicInterval::from_int(1);
  const DyadicInterval theta = angle_of(r);
  const DyadicInterval at_hi = cos_series_at(theta.hi());
  const DyadicInterval at_lo = theta.is_point() ? at_hi : cos_series_at(theta.lo());
  return DyadicInterval(at_hi.lo(), at_lo.hi());
}

DyadicInterval TrigEvaluator::sin_reduced(const BigRational& r) const {
  if (r == 0) return DyadicInterval();
  const DyadicInterval theta = angle_of(r);
  const DyadicInterval at_lo = sin_series_at(theta.lo());
  const DyadicInterval at_hi = theta.is_point() ? at_lo : sin_series_at(theta.hi());
  return DyadicInterval(at_lo.lo(), at_hi.hi());
}

DyadicInterval TrigEvaluator::cos_two_pi(std::int64_t k, std::uint64_t n) const {
  if (n == 0) throw std::invalid_argument("cos_two_pi: n must be positive");
  const BigInt bn(static_cast<unsigned long>(n));
  BigInt bk(static_cast<long>(k));
  bk %= bn;
  if (bk < 0) bk += bn;
  BigRational r = make_rational(bk, bn);
  const BigRational half(1, 2), quarter(1, 4), eighth(1, 8);
  if (r > half) r = 1 - r;
  bool negate = false;
  if (r > quarter) {
    r = half - r;
    negate = true;
  }
  DyadicInterval v = (r > eighth) ? sin_reduced(quarter - r) : cos_reduced(r);
  return negate ? -v : v;
}

DyadicInterval TrigEvaluator::sin_two_pi(std::int64_t k, std::uint64_t n) const {
  // sin(x) = cos(x - pi/2)
  return cos_two_pi(4 * k - static_cast<std::int64_t>(n), 4 * n);
}

DyadicInterval cos_two_pi(std::int64_t k, std::uint64_t n, Precision prec) {
  return TrigEvaluator(prec).cos_two_pi(k, n);
}

}  // namespace gauss::num
