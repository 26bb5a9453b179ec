#pragma once

// Gaussian-period bisection tree for a Fermat prime p = 2^m + 1.
//
// The node with label w (|w| = L) is the sum of eps^(g^e) over the exponent
// class e = value(w) (mod 2^L). The root (empty label) is the full sum -1;
// children split a class by the next bit. Labels of length m - 1 are the
// two-term f-periods eps^s + eps^-s = 2 cos(2 pi s / p); every node in the
// tree is therefore real.

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "gauss/cyclotomic.hpp"
#include "gauss/numkernel.hpp"
#include "gauss/radical.hpp"

namespace gauss::periods {

using cyclo::Label;
using num::BigInt;
using num::BigRational;
using num::DyadicInterval;
using num::Precision;

struct PeriodNode {
  Label label;
  // eps exponents (g^e mod p) of the class, in increasing e.
  std::vector<std::uint64_t> terms;
  // Enclosure of the (real) period from direct cosine sums.
  DyadicInterval value;
  std::optional<radical::Expr> expr;
};

class PeriodTree {
 public:
  PeriodTree(std::uint64_t p, std::uint64_t g, unsigned m) : p_(p), g_(g), m_(m) {}

  std::uint64_t p() const { return p_; }
  std::uint64_t g() const { return g_; }
  unsigned m() const { return m_; }
  // Label length of the f-periods (deepest level).
  std::size_t depth() const { return m_ - 1; }
  bool has_children(const Label& w) const { return w.size() < depth(); }

  const PeriodNode& node(const Label& w) const;
  PeriodNode& node(const Label& w);
  const std::map<Label, PeriodNode>& nodes() const { return nodes_; }
  // Labels of the given length in increasing value order.
  std::vector<Label> level(std::size_t length) const;

  // e with g^e = s (mod p), for 1 <= s < p.
  std::uint64_t log(std::uint64_t s) const { return dlog_[s]; }
  // Label of length `length` whose class contains eps^s.
  Label class_of(std::uint64_t s, std::size_t length) const {
    return Label::from_value(dlog_[s] & ((std::uint64_t{1} << length) - 1), length);
  }

  // Recompute every node enclosure at a new precision.
  void refine_values(Precision prec);
  Precision value_precision() const { return value_prec_; }

 private:
  friend PeriodTree build_period_tree(std::uint64_t, std::uint64_t, Precision);

  std::uint64_t p_;
  std::uint64_t g_;
  unsigned m_;
  Precision value_prec_{};
  std::map<Label, PeriodNode> nodes_;
  std::vector<std::uint32_t> dlog_;
};

// Throws NotFermatPrime, and std::invalid_argument when g is not a
// primitive root mod p.
PeriodTree build_period_tree(std::uint64_t p, std::uint64_t g,
                             Precision prec = num::kDefaultPrecision);

// Exact cyclotomic element of a node.
cyclo::CycloElement period_cyclo(const PeriodTree& tree, const Label& w);

// A_{w0} * A_{w1} = constant + sum_j coefficients[j] * A_j over the labels j
// with |j| = |w|. For the root the single level-0 period (-1) is folded into
// the constant.
struct LinearCombination {
  BigRational constant;
  std::map<Label, BigInt> coefficients;

  cyclo::CycloElement to_cyclo(const PeriodTree& tree) const;
  BigInt coefficient_sum() const;
  friend bool operator==(const LinearCombination&, const LinearCombination&) = default;
};

enum class Exec { Serial, Parallel };

// Counting method: alpha(s) = #{(a, b) in class(w0) x class(w1) :
// a + b = s (mod p)}; alpha is constant on each level-|w| class, and
// alpha(0) is the constant term. Throws NoChildren on a leaf, and
// VerificationFailed if alpha is not class-constant.
LinearCombination sibling_product(const PeriodTree& tree, const Label& w,
                                  Exec exec = Exec::Parallel);

}  // namespace gauss::periods
