#pragma once

// Test-side reference values from MPFR (correctly rounded), independent of
// the library's own pi, series and interval code.

#include <mpfr.h>

#include <cstdint>
#include <optional>
#include <random>

#include "gauss/numkernel.hpp"
#include "gauss/radical.hpp"

namespace oracle {

using gauss::num::BigInt;
using gauss::num::BigRational;

class Mp {
 public:
  explicit Mp(mpfr_prec_t bits) { mpfr_init2(v_, bits); }
  Mp(const Mp& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  Mp& operator=(const Mp&) = delete;
  ~Mp() { mpfr_clear(v_); }
  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }

 private:
  mpfr_t v_;
};

inline BigRational to_rational(mpfr_srcptr x) {
  BigInt m;
  const mpfr_exp_t e = mpfr_get_z_2exp(m.get_mpz_t(), x);
  BigRational q(m);
  if (e >= 0) {
    mpq_mul_2exp(q.get_mpq_t(), q.get_mpq_t(), static_cast<mp_bitcnt_t>(e));
  } else {
    mpq_div_2exp(q.get_mpq_t(), q.get_mpq_t(), static_cast<mp_bitcnt_t>(-e));
  }
  return q;
}

struct Bracket {
  BigRational lo;
  BigRational hi;
};

inline bool meets(const gauss::num::DyadicInterval& x, const Bracket& b) {
  return x.lo().to_rational() <= b.hi && b.lo <= x.hi().to_rational();
}

inline bool inside(const gauss::num::DyadicInterval& x, const Bracket& b) {
  return x.lo().to_rational() <= b.lo && b.hi <= x.hi().to_rational();
}

// Encloses cos(2 pi k / n): the argument is rounded once (relative error
// 2^-bits, absolute below 2^(4-bits) for |k/n| <= 1) and cos is 1-Lipschitz.
inline Bracket cos_bracket(std::int64_t k, std::uint64_t n, mpfr_prec_t bits = 512) {
  k %= static_cast<std::int64_t>(n);
  Mp x(bits), c_lo(bits), c_hi(bits);
  mpfr_const_pi(x.get(), MPFR_RNDN);
  mpfr_mul_si(x.get(), x.get(), 2 * k, MPFR_RNDN);
  mpfr_div_ui(x.get(), x.get(), n, MPFR_RNDN);
  mpfr_cos(c_lo.get(), x.get(), MPFR_RNDD);
  mpfr_cos(c_hi.get(), x.get(), MPFR_RNDU);
  BigRational slack(1);
  mpq_div_2exp(slack.get_mpq_t(), slack.get_mpq_t(), static_cast<mp_bitcnt_t>(bits - 6));
  return {to_rational(c_lo.get()) - slack, to_rational(c_hi.get()) + slack};
}

inline Bracket sin_bracket(std::int64_t k, std::uint64_t n, mpfr_prec_t bits = 512) {
  k %= static_cast<std::int64_t>(n);
  Mp x(bits), s_lo(bits), s_hi(bits);
  mpfr_const_pi(x.get(), MPFR_RNDN);
  mpfr_mul_si(x.get(), x.get(), 2 * k, MPFR_RNDN);
  mpfr_div_ui(x.get(), x.get(), n, MPFR_RNDN);
  mpfr_sin(s_lo.get(), x.get(), MPFR_RNDD);
  mpfr_sin(s_hi.get(), x.get(), MPFR_RNDU);
  BigRational slack(1);
  mpq_div_2exp(slack.get_mpq_t(), slack.get_mpq_t(), static_cast<mp_bitcnt_t>(bits - 6));
  return {to_rational(s_lo.get()) - slack, to_rational(s_hi.get()) + slack};
}

inline Bracket pi_bracket(mpfr_prec_t bits = 512) {
  Mp lo(bits), hi(bits);
  mpfr_const_pi(lo.get(), MPFR_RNDD);
  mpfr_const_pi(hi.get(), MPFR_RNDU);
  return {to_rational(lo.get()), to_rational(hi.get())};
}

// Round-to-nearest evaluation at `bits`; nullopt when a radicand or divisor
// comes within 2^-40 of zero (the double-check would be ill-conditioned) or
// a radicand is negative.
inline std::optional<Mp> evaluate(const gauss::radical::Expr& e, mpfr_prec_t bits = 1024) {
  using gauss::radical::Op;
  Mp out(bits);
  switch (e.op()) {
    case Op::Leaf:
      mpfr_set_q(out.get(), e.value().get_mpq_t(), MPFR_RNDN);
      return out;
    case Op::Sqrt: {
      auto a = evaluate(e.child(), bits);
      if (!a || mpfr_cmp_d(a->get(), 0x1p-40) < 0) return std::nullopt;
      mpfr_sqrt(out.get(), a->get(), MPFR_RNDN);
      return out;
    }
    default: break;
  }
  auto a = evaluate(e.lhs(), bits);
  auto b = evaluate(e.rhs(), bits);
  if (!a || !b) return std::nullopt;
  switch (e.op()) {
    case Op::Add: mpfr_add(out.get(), a->get(), b->get(), MPFR_RNDN); break;
    case Op::Sub: mpfr_sub(out.get(), a->get(), b->get(), MPFR_RNDN); break;
    case Op::Mul: mpfr_mul(out.get(), a->get(), b->get(), MPFR_RNDN); break;
    case Op::Div:
      if (mpfr_cmpabs_ui(b->get(), 0) == 0) return std::nullopt;
      {
        Mp mag(bits);
        mpfr_abs(mag.get(), b->get(), MPFR_RNDN);
        if (mpfr_cmp_d(mag.get(), 0x1p-40) < 0) return std::nullopt;
      }
      mpfr_div(out.get(), a->get(), b->get(), MPFR_RNDN);
      break;
    default: break;
  }
  return out;
}

// Bracket around an MPFR value with relative slack 2^(slack_bits) ulps.
inline Bracket around(const Mp& v, mpfr_prec_t slack_bits = 900) {
  const BigRational c = to_rational(v.get());
  BigRational s(1);
  mpq_div_2exp(s.get_mpq_t(), s.get_mpq_t(), static_cast<mp_bitcnt_t>(slack_bits));
  const BigRational mag = abs(c) > 1 ? BigRational(abs(c)) : BigRational(1);
  return {c - s * mag, c + s * mag};
}

// Small random expression over rationals in [-9, 9] with denominators <= 9.
inline gauss::radical::Expr random_expr(std::mt19937_64& rng, int depth) {
  using gauss::radical::Expr;
  using gauss::radical::Op;
  std::uniform_int_distribution<int> num(-9, 9), den(1, 9), pick(0, 5);
  if (depth == 0) return Expr(gauss::num::make_rational(num(rng), den(rng)));
  switch (pick(rng)) {
    case 0: return Expr(gauss::num::make_rational(num(rng), den(rng)));
    case 1: return random_expr(rng, depth - 1) + random_expr(rng, depth - 1);
    case 2: return random_expr(rng, depth - 1) - random_expr(rng, depth - 1);
    case 3: return random_expr(rng, depth - 1) * random_expr(rng, depth - 1);
    case 4: return random_expr(rng, depth - 1) / random_expr(rng, depth - 1);
    default: {
      // Mostly nonnegative radicands: x*x + c.
      const Expr x = random_expr(rng, depth - 1);
      return gauss::radical::sqrt(x * x + Expr(gauss::num::make_rational(num(rng) + 9, den(rng))));
    }
  }
}

}  // namespace oracle
