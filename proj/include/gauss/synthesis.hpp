#pragma once

// Nested-radical expressions for cos(2 pi / n): descend the period tree
// solving one quadratic per sibling pair, then compose prime pieces for
// general constructible n.

#include <cstdint>
#include <functional>
#include <map>
#include <string>

#include "gauss/criterion.hpp"
#include "gauss/error.hpp"
#include "gauss/periods.hpp"
#include "gauss/radical.hpp"

namespace gauss::periods {

struct SynthesisOptions {
  Precision prec = num::kDefaultPrecision;
  unsigned cap_bits = 1u << 14;
  // p = 65537 is refused unless set.
  bool allow_65537 = false;
  Exec exec = Exec::Parallel;
  // Cross-check each counted product against cyclo_mul (p <= 257 only).
  bool check_products = true;
  // Called with a short status line after each phase.
  std::function<void(const std::string&)> progress;
};

// One solved sibling pair under node w: A_{w0}, A_{w1} are the roots of
// t^2 - S t + P with S = A_w, P = product.
struct SiblingStep {
  LinearCombination product;
  // +1 when A_{w0} = (S + sqrt(S^2 - 4P)) / 2, -1 for the other root.
  int sign = 1;
  radical::Expr discriminant;
  DyadicInterval discriminant_value;
};

struct PeriodSynthesis {
  PeriodTree tree;
  std::map<Label, SiblingStep> steps;
  // simplify(f_1 / 2)
  radical::Expr cos_expr;
  // Precision at which every sign choice was unambiguous.
  Precision decided_at;
};

// Throws NotFermatPrime, VerificationFailed, PrecisionCapExceeded, and
// std::invalid_argument for p = 65537 without the opt-in.
PeriodSynthesis synthesize_periods(std::uint64_t p, const SynthesisOptions& opts = {});

radical::Expr synthesize_radical(std::uint64_t p, const SynthesisOptions& opts = {});

class NotConstructibleError : public Error {
 public:
  explicit NotConstructibleError(criterion::ConstructibilityVerdict verdict);
  const criterion::ConstructibilityVerdict& verdict() const { return verdict_; }

 private:
  criterion::ConstructibilityVerdict verdict_;
};

// cos(2 pi / n) for constructible n; the result is checked against
// cos_two_pi(1, n) at opts.prec. Throws NotConstructibleError.
radical::Expr synthesize_cos(std::uint64_t n, const SynthesisOptions& opts = {});

}  // namespace gauss::periods
