#include "gauss/tower.hpp"

#include <algorithm>
#include <stdexcept>

#include "gauss/error.hpp"

namespace gauss::tower {

namespace {

using Coords = std::vector<BigRational>;

bool all_zero(const BigRational* x, std::size_t n) {
  return std::all_of(x, x + n, [](const BigRational& q) { return q == 0; });
}

Coords add_raw(const BigRational* x, const BigRational* y, std::size_t n) {
  Coords out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = x[i] + y[i];
  return out;
}

Coords sub_raw(const BigRational* x, const BigRational* y, std::size_t n) {
  Coords out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = x[i] - y[i];
  return out;
}

Coords mul_raw(const TowerContext& ctx, const BigRational* x, const BigRational* y,
               std::size_t level) {
  if (level == 0) return Coords{x[0] * y[0]};
  const std::size_t h = std::size_t{1} << (level - 1);
  const BigRational* alpha = x;
  const BigRational* beta = x + h;
  const BigRational* gamma = y;
  const BigRational* delta = y + h;
  const bool bz = all_zero(beta, h);
  const bool dz = all_zero(delta, h);
  Coords out(2 * h);
  Coords lo = mul_raw(ctx, alpha, gamma, level - 1);
  Coords hi;
  if (bz && dz) {
    hi.assign(h, BigRational(0));
  } else if (bz) {
    hi = mul_raw(ctx, alpha, delta, level - 1);
  } else if (dz) {
    hi = mul_raw(ctx, beta, gamma, level - 1);
  } else {
    const Coords bd = mul_raw(ctx, beta, delta, level - 1);
    const Coords s1 = add_raw(alpha, beta, h);
    const Coords s2 = add_raw(gamma, delta, h);
    hi = mul_raw(ctx, s1.data(), s2.data(), level - 1);
    for (std::size_t i = 0; i < h; ++i) hi[i] -= lo[i] + bd[i];
    const Coords bda = mul_raw(ctx, bd.data(), ctx.radicand(level).data(), level - 1);
    for (std::size_t i = 0; i < h; ++i) lo[i] += bda[i];
  }
  std::move(lo.begin(), lo.end(), out.begin());
  std::move(hi.begin(), hi.end(), out.begin() + static_cast<std::ptrdiff_t>(h));
  return out;
}

Coords inv_raw(const TowerContext& ctx, const BigRational* x, std::size_t level, bool top) {
  const std::size_t n = std::size_t{1} << level;
  if (all_zero(x, n)) {
    if (top) throw Error(ErrorKind::DivByZero, "inverse of zero");
    throw Error(ErrorKind::ZeroDivisor, "vanishing norm below level " + std::to_string(level + 1));
  }
  if (level == 0) return Coords{1 / x[0]};
  const std::size_t h = n / 2;
  const BigRational* alpha = x;
  const BigRational* beta = x + h;
  Coords out(n, BigRational(0));
  if (all_zero(beta, h)) {
    Coords a = inv_raw(ctx, alpha, level - 1, false);
    std::move(a.begin(), a.end(), out.begin());
    return out;
  }
  const Coords a2 = mul_raw(ctx, alpha, alpha, level - 1);
  const Coords b2 = mul_raw(ctx, beta, beta, level - 1);
  const Coords b2a = mul_raw(ctx, b2.data(), ctx.radicand(level).data(), level - 1);
  const Coords norm = sub_raw(a2.data(), b2a.data(), h);
  if (all_zero(norm.data(), h)) {
    throw Error(ErrorKind::ZeroDivisor,
                "norm vanishes at level " + std::to_string(level) + " (a_k is a square below)");
  }
  const Coords ni = inv_raw(ctx, norm.data(), level - 1, false);
  const Coords lo = mul_raw(ctx, alpha, ni.data(), level - 1);
  const Coords hi = mul_raw(ctx, beta, ni.data(), level - 1);
  for (std::size_t i = 0; i < h; ++i) {
    out[i] = lo[i];
    out[h + i] = -hi[i];
  }
  return out;
}

void require_same(const TowerElement& x, const TowerElement& y) {
  if (!x.same_context(y)) throw Error(ErrorKind::ContextMismatch, "elements of different towers");
}

DyadicInterval enclose_raw(const BigRational* x, std::size_t level,
                           const std::vector<DyadicInterval>& roots, Precision prec) {
  if (level == 0) return DyadicInterval::from_rational(x[0], prec);
  const std::size_t h = std::size_t{1} << (level - 1);
  const auto a = enclose_raw(x, level - 1, roots, prec);
  if (all_zero(x + h, h)) return a;
  const auto b = enclose_raw(x + h, level - 1, roots, prec);
  return num::add(a, num::mul(b, roots[level - 1], prec), prec);
}

// Enclosures of t_1..t_k, clamping radicands at zero from below.
std::vector<DyadicInterval> root_enclosures(const TowerContext& ctx, std::size_t k,
                                            Precision prec) {
  std::vector<DyadicInterval> roots;
  roots.reserve(k);
  for (std::size_t j = 1; j <= k; ++j) {
    auto a = enclose_raw(ctx.radicand(j).data(), j - 1, roots, prec);
    if (a.hi().sign() < 0) {
      throw Error(ErrorKind::NegativeRadicand, "a_" + std::to_string(j) + " < 0");
    }
    if (a.lo().sign() < 0) a = DyadicInterval(num::Dyadic(0), a.hi());
    roots.push_back(num::interval_sqrt(a, prec));
  }
  return roots;
}

}  // namespace

std::shared_ptr<TowerContext> TowerContext::create() {
  return std::shared_ptr<TowerContext>(new TowerContext());
}

void TowerContext::extend(const TowerElement& a) {
  if (&a.context() != this) throw Error(ErrorKind::ContextMismatch, "radicand from another tower");
  if (a.effective_level() > depth()) {
    throw Error(ErrorKind::BadLevel, "radicand above the current top level");
  }
  Coords coords = a.coords();
  coords.resize(std::size_t{1} << depth(), BigRational(0));
  const TowerElement base(shared_from_this(), depth(), std::move(coords));
  if (!base.is_zero()) {
    // Certify a >= 0 numerically before admitting t = sqrt(a).
    for (unsigned bits = 64;; bits *= 2) {
      const auto v = enclose(base, Precision{bits});
      if (v.lo().sign() > 0) break;
      if (v.hi().sign() < 0 || bits >= 8192) {
        throw Error(ErrorKind::NegativeRadicand,
                    "radicand not certified nonnegative: " + num::format_interval(v));
      }
    }
  }
  radicands_.push_back(base.coords());
}

TowerElement TowerContext::rational(const BigRational& q) const {
  return TowerElement(shared_from_this(), 0, Coords{q});
}

TowerElement TowerContext::generator(std::size_t k) const {
  if (k == 0 || k > depth()) throw Error(ErrorKind::BadLevel, "no generator t_" + std::to_string(k));
  Coords c(std::size_t{1} << k, BigRational(0));
  c[c.size() / 2] = 1;
  return TowerElement(shared_from_this(), k, std::move(c));
}

TowerElement TowerContext::from_coords(std::size_t level, Coords coords) const {
  if (level > depth()) throw Error(ErrorKind::BadLevel, "level above tower depth");
  if (coords.size() != (std::size_t{1} << level)) {
    throw std::invalid_argument("a level-k element needs 2^k coordinates");
  }
  return TowerElement(shared_from_this(), level, std::move(coords));
}

TowerElement::TowerElement(std::shared_ptr<const TowerContext> ctx, std::size_t level,
                           Coords coords)
    : context_(std::move(ctx)), level_(level), coords_(std::move(coords)) {}

bool TowerElement::is_zero() const { return all_zero(coords_.data(), coords_.size()); }

std::size_t TowerElement::effective_level() const {
  std::size_t k = level_;
  while (k > 0 && all_zero(coords_.data() + (std::size_t{1} << (k - 1)),
                           coords_.size() - (std::size_t{1} << (k - 1)))) {
    --k;
  }
  return k;
}

TowerElement TowerElement::lifted(std::size_t level) const {
  if (level <= level_) return *this;
  Coords c = coords_;
  c.resize(std::size_t{1} << level, BigRational(0));
  return TowerElement(context_, level, std::move(c));
}

bool TowerElement::equals(const TowerElement& other) const {
  require_same(*this, other);
  const std::size_t k = std::max(level_, other.level_);
  return lifted(k).coords_ == other.lifted(k).coords_;
}

TowerElement tower_arith(const TowerElement& x, const TowerElement& y, TowerOp op) {
  require_same(x, y);
  const std::size_t k = std::max(x.level(), y.level());
  const TowerElement a = x.lifted(k);
  const TowerElement b = y.lifted(k);
  const std::size_t n = a.coords().size();
  Coords c;
  switch (op) {
    case TowerOp::Add: c = add_raw(a.coords().data(), b.coords().data(), n); break;
    case TowerOp::Sub: c = sub_raw(a.coords().data(), b.coords().data(), n); break;
    case TowerOp::Mul: c = mul_raw(x.context(), a.coords().data(), b.coords().data(), k); break;
  }
  return x.context().from_coords(k, std::move(c));
}

TowerElement tower_inv(const TowerElement& x) {
  return x.context().from_coords(x.level(),
                                 inv_raw(x.context(), x.coords().data(), x.level(), true));
}

TowerElement conjugate(const TowerElement& x, std::size_t k) {
  if (k == 0 || k > x.level()) {
    throw Error(ErrorKind::BadLevel, "conjugate at level " + std::to_string(k) +
                                         " of a level-" + std::to_string(x.level()) + " element");
  }
  Coords c = x.coords();
  const std::size_t block = std::size_t{1} << k;
  for (std::size_t start = 0; start < c.size(); start += block) {
    for (std::size_t i = start + block / 2; i < start + block; ++i) c[i] = -c[i];
  }
  return x.context().from_coords(x.level(), std::move(c));
}

bool verify_quadratic(const TowerElement& r, const TowerElement& s, const TowerElement& p) {
  require_same(r, s);
  require_same(r, p);
  return (r * r - s * r + p).is_zero();
}

TowerElement operator+(const TowerElement& x, const TowerElement& y) {
  return tower_arith(x, y, TowerOp::Add);
}
TowerElement operator-(const TowerElement& x, const TowerElement& y) {
  return tower_arith(x, y, TowerOp::Sub);
}
TowerElement operator*(const TowerElement& x, const TowerElement& y) {
  return tower_arith(x, y, TowerOp::Mul);
}
TowerElement operator-(const TowerElement& x) { return scale(x, BigRational(-1)); }

TowerElement scale(const TowerElement& x, const BigRational& q) {
  Coords c = x.coords();
  for (auto& v : c) v *= q;
  return x.context().from_coords(x.level(), std::move(c));
}

DyadicInterval enclose(const TowerElement& x, Precision prec) {
  const Precision work{prec.bits + 32};
  const auto roots = root_enclosures(x.context(), x.level(), work);
  return enclose_raw(x.coords().data(), x.level(), roots, work);
}

std::size_t coefficient_bits(const TowerElement& x) {
  std::size_t bits = 0;
  for (const auto& q : x.coords()) {
    if (q == 0) continue;
    bits = std::max({bits, mpz_sizeinbase(q.get_num_mpz_t(), 2),
                     mpz_sizeinbase(q.get_den_mpz_t(), 2)});
  }
  return bits;
}

}  // namespace gauss::tower
