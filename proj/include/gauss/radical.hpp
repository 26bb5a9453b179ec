#pragma once

// Nested-radical expressions over the rationals: the calculator language
// 1, +, -, *, / and sqrt of nonnegative reals.
//
// An Expr is an immutable handle to a shared node, so synthesized
// expressions are DAGs; every traversal here memoizes on node identity.
// Serialization writes the expanded tree.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>

#include "gauss/numkernel.hpp"

namespace gauss::radical {

using num::BigRational;
using num::DyadicInterval;
using num::Precision;

enum class Op { Leaf, Add, Sub, Mul, Div, Sqrt };

struct Node;

class Expr {
 public:
  // Empty handle; only valid as a placeholder.
  Expr() = default;
  Expr(const BigRational& value);  // NOLINT(google-explicit-constructor)
  Expr(long value) : Expr(BigRational(value)) {}  // NOLINT

  static Expr make(Op op, Expr lhs, Expr rhs);
  static Expr make_sqrt(Expr radicand);

  Op op() const;
  bool is_leaf() const { return op() == Op::Leaf; }
  // Leaf value; only meaningful for leaves.
  const BigRational& value() const;
  const Expr& lhs() const;
  const Expr& rhs() const;
  const Expr& child() const { return lhs(); }

  const Node* id() const { return node_.get(); }
  bool valid() const { return node_ != nullptr; }

 private:
  explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct Node {
  Op op = Op::Leaf;
  BigRational value;
  Expr lhs;
  Expr rhs;
};

Expr operator+(const Expr& a, const Expr& b);
Expr operator-(const Expr& a, const Expr& b);
Expr operator*(const Expr& a, const Expr& b);
Expr operator/(const Expr& a, const Expr& b);
Expr sqrt(const Expr& radicand);

bool structurally_equal(const Expr& a, const Expr& b);
// Node count of the expanded tree, saturating at `limit`.
std::uint64_t tree_size(const Expr& e, std::uint64_t limit = UINT64_MAX);
std::uint64_t dag_size(const Expr& e);
// Maximum number of nested square roots on any root-to-leaf path.
unsigned sqrt_depth(const Expr& e);

// Fixed-precision memoized evaluation. A radicand whose enclosure straddles
// zero is clamped at 0 and the result marked uncertified; a divisor whose
// enclosure straddles zero makes eval() return nullopt. Definite failures
// (radicand entirely negative, divisor exactly 0) throw.
class Evaluator {
 public:
  explicit Evaluator(Precision working);

  std::optional<DyadicInterval> eval(const Expr& e);
  bool certified() const { return certified_; }
  Precision precision() const { return working_; }

 private:
  const DyadicInterval& eval_node(const Expr& e);

  Precision working_;
  bool certified_ = true;
  std::unordered_map<const Node*, DyadicInterval> memo_;
};

inline constexpr unsigned kDefaultPrecisionCap = 1u << 15;

// Rigorous enclosure with width <= 2^(1-prec) * max(1, |value|); the
// internal precision doubles until that holds, up to cap_bits.
// Throws SqrtOfNegative, DivByZeroInterval, PrecisionCapExceeded.
DyadicInterval eval_interval(const Expr& e, Precision prec = num::kDefaultPrecision,
                             unsigned cap_bits = kDefaultPrecisionCap);

// Conservative, value-preserving normalization: folds rational subtrees,
// takes square factors out of rational radicands, and rewrites sums of
// rational multiples of the same subexpressions as (c0 + c1*X1 + ...)/D with
// integer c_i. Never denests.
Expr simplify(const Expr& e);

enum class Format { Text, Latex, Sexpr };

std::string serialize(const Expr& e, Format format);

// Grammar:
//   expr  := atom | "(" op expr+ ")"
//   op    := "add" | "sub" | "mul" | "div"   (two operands) | "sqrt" (one)
//   atom  := ["-"] digits ["/" digits]
// Throws gauss::ParseError with the byte offset of the failure.
Expr parse_sexpr(std::string_view text);

}  // namespace gauss::radical
