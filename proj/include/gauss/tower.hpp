#pragma once

// Exact arithmetic in a formal tower Q = K_0 c K_1 c ... c K_r with
// K_k = K_{k-1}[t_k] / (t_k^2 - a_k). A level-k element is stored densely as
// 2^k rational coordinates: the first half is alpha, the second half beta,
// meaning alpha + beta * t_k, recursively.
//
// The formal ring may have zero divisors when some a_k is already a square
// below it; inversion reports that as ZeroDivisor. Identities proved here
// hold for the real tower taking t_k = +sqrt(a_k).

#include <chrono>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "gauss/numkernel.hpp"
#include "gauss/synthesis.hpp"

namespace gauss::tower {

using num::BigRational;
using num::DyadicInterval;
using num::Precision;

class TowerElement;

class TowerContext : public std::enable_shared_from_this<TowerContext> {
 public:
  static std::shared_ptr<TowerContext> create();

  std::size_t depth() const { return radicands_.size(); }
  // a_k for 1 <= k <= depth, an element of level k - 1.
  const std::vector<BigRational>& radicand(std::size_t k) const { return radicands_.at(k - 1); }

  // Appends a_{depth+1}; `a` must belong to this context with level <= depth.
  // Elements made before the call stay valid. Throws ContextMismatch, and
  // NegativeRadicand when a's enclosure is certainly negative.
  void extend(const TowerElement& a);

  TowerElement rational(const BigRational& q) const;
  // t_k itself, at level k.
  TowerElement generator(std::size_t k) const;
  TowerElement from_coords(std::size_t level, std::vector<BigRational> coords) const;

 private:
  TowerContext() = default;
  std::vector<std::vector<BigRational>> radicands_;
};

class TowerElement {
 public:
  std::size_t level() const { return level_; }
  const std::vector<BigRational>& coords() const { return coords_; }
  const TowerContext& context() const { return *context_; }
  bool same_context(const TowerElement& other) const { return context_ == other.context_; }
  bool is_zero() const;
  // Exact equality after lifting to a common level.
  bool equals(const TowerElement& other) const;
  // Level at which this element actually lives (trailing beta halves zero).
  std::size_t effective_level() const;
  TowerElement lifted(std::size_t level) const;

 private:
  friend class TowerContext;
  TowerElement(std::shared_ptr<const TowerContext> ctx, std::size_t level,
               std::vector<BigRational> coords);

  std::shared_ptr<const TowerContext> context_;
  std::size_t level_ = 0;
  std::vector<BigRational> coords_;
};

enum class TowerOp { Add, Sub, Mul };

// Throws ContextMismatch.
TowerElement tower_arith(const TowerElement& x, const TowerElement& y, TowerOp op);
// Throws DivByZero for x = 0 and ZeroDivisor when a norm vanishes.
TowerElement tower_inv(const TowerElement& x);
// Negates the t_k coordinate. Throws BadLevel unless 1 <= k <= x.level().
TowerElement conjugate(const TowerElement& x, std::size_t k);
// r^2 - S r + P == 0 exactly. Throws ContextMismatch.
bool verify_quadratic(const TowerElement& r, const TowerElement& s, const TowerElement& p);

TowerElement operator+(const TowerElement& x, const TowerElement& y);
TowerElement operator-(const TowerElement& x, const TowerElement& y);
TowerElement operator*(const TowerElement& x, const TowerElement& y);
TowerElement operator-(const TowerElement& x);
TowerElement scale(const TowerElement& x, const BigRational& q);

// Real enclosure with every t_k taken as the nonnegative root.
DyadicInterval enclose(const TowerElement& x, Precision prec = num::kDefaultPrecision);

// Largest numerator or denominator bit length over the coordinates.
std::size_t coefficient_bits(const TowerElement& x);

struct EmbedOptions {
  std::optional<std::chrono::steady_clock::time_point> deadline;
};

struct TowerEmbedding {
  std::shared_ptr<const TowerContext> context;
  std::map<cyclo::Label, TowerElement> periods;
  // verify_quadratic calls that returned true (two per sibling pair).
  std::size_t quadratic_checks = 0;
  // conjugate(A_{w0}, k) == A_{w1} checks that held.
  std::size_t conjugation_checks = 0;
  // Largest coefficient size seen in each level's periods.
  std::vector<std::size_t> coefficient_bits_by_level;
};

// One radicand per tree level: a_{L+1} is the discriminant under 0^L. Every
// other discriminant D_w at that level is shown to be a square there: its
// root is (C / a_{L+1}) t_{L+1} up to sign, C = delta_w * delta_{0^L} read off
// the cyclotomic product (delta = A_{w0} - A_{w1}). Then both children are
// placed and checked against their quadratic.
// Throws VerificationFailed, Timeout.
TowerEmbedding embed_synthesis(const periods::PeriodSynthesis& synthesis,
                               const EmbedOptions& opts = {});
// p in {3, 5, 17, 257}; throws NotFermatPrime or std::invalid_argument.
TowerEmbedding embed_synthesis(std::uint64_t p, const EmbedOptions& opts = {});

}  // namespace gauss::tower
