#include "gauss/radical.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "gauss/error.hpp"

namespace gauss::radical {

Expr::Expr(const BigRational& value) {
  auto node = std::make_shared<Node>();
  node->op = Op::Leaf;
  node->value = value;
  node_ = std::move(node);
}

Expr Expr::make(Op op, Expr lhs, Expr rhs) {
  if (op == Op::Leaf || op == Op::Sqrt) throw std::invalid_argument("Expr::make: binary op expected");
  auto node = std::make_shared<Node>();
  node->op = op;
  node->lhs = std::move(lhs);
  node->rhs = std::move(rhs);
  return Expr(std::shared_ptr<const Node>(std::move(node)));
}

Expr Expr::make_sqrt(Expr radicand) {
  auto node = std::make_shared<Node>();
  node->op = Op::Sqrt;
  node->lhs = std::move(radicand);
  return Expr(std::shared_ptr<const Node>(std::move(node)));
}

Op Expr::op() const { return node_->op; }
const BigRational& Expr::value() const { return node_->value; }
const Expr& Expr::lhs() const { return node_->lhs; }
const Expr& Expr::rhs() const { return node_->rhs; }

Expr operator+(const Expr& a, const Expr& b) { return Expr::make(Op::Add, a, b); }
Expr operator-(const Expr& a, const Expr& b) { return Expr::make(Op::Sub, a, b); }
Expr operator*(const Expr& a, const Expr& b) { return Expr::make(Op::Mul, a, b); }
Expr operator/(const Expr& a, const Expr& b) { return Expr::make(Op::Div, a, b); }
Expr sqrt(const Expr& radicand) { return Expr::make_sqrt(radicand); }

namespace {

bool is_binary(Op op) { return op == Op::Add || op == Op::Sub || op == Op::Mul || op == Op::Div; }

bool equal_impl(const Expr& a, const Expr& b,
                std::set<std::pair<const Node*, const Node*>>& known) {
  if (a.id() == b.id()) return true;
  if (a.op() != b.op()) return false;
  if (known.count({a.id(), b.id()})) return true;
  bool eq = false;
  switch (a.op()) {
    case Op::Leaf: eq = a.value() == b.value(); break;
    case Op::Sqrt: eq = equal_impl(a.child(), b.child(), known); break;
    default:
      eq = equal_impl(a.lhs(), b.lhs(), known) && equal_impl(a.rhs(), b.rhs(), known);
  }
  if (eq) known.insert({a.id(), b.id()});
  return eq;
}

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b, std::uint64_t limit) {
  return (a >= limit || b >= limit - a) ? limit : a + b;
}

}  // namespace

bool structurally_equal(const Expr& a, const Expr& b) {
  std::set<std::pair<const Node*, const Node*>> known;
  return equal_impl(a, b, known);
}

std::uint64_t tree_size(const Expr& e, std::uint64_t limit) {
  std::unordered_map<const Node*, std::uint64_t> memo;
  auto rec = [&](auto&& self, const Expr& x) -> std::uint64_t {
    if (auto it = memo.find(x.id()); it != memo.end()) return it->second;
    std::uint64_t n = 1;
    if (x.op() == Op::Sqrt) n = saturating_add(n, self(self, x.child()), limit);
    if (is_binary(x.op())) {
      n = saturating_add(n, self(self, x.lhs()), limit);
      n = saturating_add(n, self(self, x.rhs()), limit);
    }
    memo.emplace(x.id(), n);
    return n;
  };
  return rec(rec, e);
}

std::uint64_t dag_size(const Expr& e) {
  std::set<const Node*> seen;
  std::vector<const Expr*> stack{&e};
  while (!stack.empty()) {
    const Expr* x = stack.back();
    stack.pop_back();
    if (!seen.insert(x->id()).second) continue;
    if (x->op() == Op::Sqrt) stack.push_back(&x->child());
    if (is_binary(x->op())) {
      stack.push_back(&x->lhs());
      stack.push_back(&x->rhs());
    }
  }
  return seen.size();
}

unsigned sqrt_depth(const Expr& e) {
  std::unordered_map<const Node*, unsigned> memo;
  auto rec = [&](auto&& self, const Expr& x) -> unsigned {
    if (auto it = memo.find(x.id()); it != memo.end()) return it->second;
    unsigned d = 0;
    if (x.op() == Op::Sqrt) d = 1 + self(self, x.child());
    if (is_binary(x.op())) d = std::max(self(self, x.lhs()), self(self, x.rhs()));
    memo.emplace(x.id(), d);
    return d;
  };
  return rec(rec, e);
}

// ------------------------------------------------------------- evaluation

namespace {
struct NeedsRefinement {};
}  // namespace

Evaluator::Evaluator(Precision working) : working_(working) {}

std::optional<DyadicInterval> Evaluator::eval(const Expr& e) {
  try {
    return eval_node(e);
  } catch (const NeedsRefinement&) {
    return std::nullopt;
  }
}

const DyadicInterval& Evaluator::eval_node(const Expr& e) {
  if (auto it = memo_.find(e.id()); it != memo_.end()) return it->second;
  DyadicInterval r;
  switch (e.op()) {
    case Op::Leaf:
      r = DyadicInterval::from_rational(e.value(), working_);
      break;
    case Op::Add: {
      const auto& a = eval_node(e.lhs());
      r = num::add(a, eval_node(e.rhs()), working_);
      break;
    }
    case Op::Sub: {
      const auto& a = eval_node(e.lhs());
      r = num::sub(a, eval_node(e.rhs()), working_);
      break;
    }
    case Op::Mul: {
      const auto& a = eval_node(e.lhs());
      r = num::mul(a, eval_node(e.rhs()), working_);
      break;
    }
    case Op::Div: {
      const DyadicInterval a = eval_node(e.lhs());
      const auto& b = eval_node(e.rhs());
      if (b.is_point() && b.lo().is_zero()) {
        throw Error(ErrorKind::DivByZeroInterval, "divisor evaluates to exactly 0");
      }
      if (b.contains_zero()) throw NeedsRefinement{};
      r = num::div(a, b, working_);
      break;
    }
    case Op::Sqrt: {
      const auto& a = eval_node(e.child());
      if (a.hi().sign() < 0) {
        throw Error(ErrorKind::SqrtOfNegative,
                    "radicand enclosure " + num::format_interval(a, 12) + " is negative");
      }
      if (a.lo().sign() < 0) {
        certified_ = false;
        r = num::interval_sqrt(DyadicInterval(num::Dyadic(), a.hi()), working_);
      } else {
        r = num::interval_sqrt(a, working_);
      }
      break;
    }
  }
  return memo_.emplace(e.id(), std::move(r)).first->second;
}

DyadicInterval eval_interval(const Expr& e, Precision prec, unsigned cap_bits) {
  const num::Dyadic one(1);
  bool divisor_straddled = false;
  for (unsigned bits = prec.bits + 32; bits <= cap_bits; bits *= 2) {
    Evaluator ev(Precision{bits});
    const auto r = ev.eval(e);
    if (!r) {
      divisor_straddled = true;
      continue;
    }
    divisor_straddled = false;
    if (!ev.certified()) continue;
    const num::Dyadic scale = std::max(one, r->magnitude());
    if (r->width() <= scale.ldexp(1 - static_cast<std::int64_t>(prec.bits))) return *r;
  }
  if (divisor_straddled) {
    throw Error(ErrorKind::DivByZeroInterval,
                "divisor still contains 0 at " + std::to_string(cap_bits) + " bits");
  }
  throw Error(ErrorKind::PrecisionCapExceeded,
              "target width not reached within " + std::to_string(cap_bits) + " bits");
}

// ----------------------------------------------------------- simplification

namespace {

struct LinearForm {
  BigRational constant;
  std::vector<std::pair<BigRational, Expr>> terms;
  std::unordered_map<const Node*, std::size_t> index;

  void add_term(const BigRational& c, const Expr& atom) {
    if (c == 0) return;
    if (index.size() != terms.size()) reindex();
    const auto [it, fresh] = index.emplace(atom.id(), terms.size());
    if (fresh) {
      terms.emplace_back(c, atom);
    } else {
      terms[it->second].first += c;
    }
  }

  void add(const LinearForm& other, const BigRational& factor) {
    constant += factor * other.constant;
    for (const auto& [k, x] : other.terms) add_term(factor * k, x);
  }

  void prune() {
    std::erase_if(terms, [](const auto& t) { return t.first == 0; });
    reindex();
  }

  void reindex() {
    index.clear();
    for (std::size_t i = 0; i < terms.size(); ++i) index.emplace(terms[i].second.id(), i);
  }

  // Cached forms drop the index; add_term rebuilds it on demand.
  LinearForm stored() && {
    index.clear();
    return std::move(*this);
  }
};

// Square factor extraction by trial division over small primes; whatever
// remains is left under the root.
std::pair<num::BigInt, num::BigInt> split_square(num::BigInt n) {
  num::BigInt outside = 1;
  if (mpz_perfect_square_p(n.get_mpz_t())) {
    num::BigInt r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return {r, 1};
  }
  for (unsigned long p = 2; p < 2000; ++p) {
    const num::BigInt p2 = num::BigInt(p) * p;
    if (p2 > n) break;
    while (mpz_divisible_p(n.get_mpz_t(), p2.get_mpz_t())) {
      n /= p2;
      outside *= p;
    }
  }
  return {outside, n};
}

// Products of sums are multiplied out only while the atom count stays small.
constexpr std::size_t kExpandLimit = 64;

class Simplifier {
 public:
  Expr run(const Expr& e) { return normal(e); }

 private:
  using Key = std::tuple<int, const Node*, const Node*>;

  Expr intern_leaf(const BigRational& q) {
    const std::string key = q.get_str();
    if (auto it = leaves_.find(key); it != leaves_.end()) return it->second;
    return leaves_.emplace(key, Expr(q)).first->second;
  }

  Expr intern(Op op, const Expr& a, const Expr& b) {
    const Key key{static_cast<int>(op), a.id(), b.valid() ? b.id() : nullptr};
    if (auto it = nodes_.find(key); it != nodes_.end()) return it->second;
    Expr made = op == Op::Sqrt ? Expr::make_sqrt(a) : Expr::make(op, a, b);
    order_.emplace(made.id(), order_.size());
    return nodes_.emplace(key, made).first->second;
  }

  // x * y for two atoms: sqrt(r) * sqrt(r) = r, otherwise a product atom with
  // operands in creation order.
  LinearForm atom_product(const Expr& x, const Expr& y) {
    if (x.id() == y.id() && x.op() == Op::Sqrt) return linear_view(x.child());
    const bool swap = order_.at(y.id()) < order_.at(x.id());
    LinearForm f;
    f.add_term(1, swap ? intern(Op::Mul, y, x) : intern(Op::Mul, x, y));
    return f;
  }

  Expr expand_product(const LinearForm& fa, const LinearForm& fb) {
    LinearForm f;
    f.constant = fa.constant * fb.constant;
    for (const auto& [k, x] : fa.terms) f.add_term(k * fb.constant, x);
    for (const auto& [k, y] : fb.terms) f.add_term(k * fa.constant, y);
    for (const auto& [k1, x] : fa.terms) {
      for (const auto& [k2, y] : fb.terms) f.add(atom_product(x, y), k1 * k2);
    }
    return emit(std::move(f));
  }

  // Decomposes a normal-form expression back into its linear form.
  const LinearForm& linear_view(const Expr& e) {
    if (auto it = views_.find(e.id()); it != views_.end()) return it->second;
    LinearForm f;
    switch (e.op()) {
      case Op::Leaf:
        f.constant = e.value();
        break;
      case Op::Add:
        f.add(linear_view(e.lhs()), 1);
        f.add(linear_view(e.rhs()), 1);
        break;
      case Op::Sub:
        f.add(linear_view(e.lhs()), 1);
        f.add(linear_view(e.rhs()), -1);
        break;
      case Op::Mul:
        if (e.lhs().is_leaf()) {
          f.add(linear_view(e.rhs()), e.lhs().value());
        } else {
          f.add_term(1, e);
        }
        break;
      case Op::Div:
        if (e.rhs().is_leaf() && e.rhs().value() != 0) {
          f.add(linear_view(e.lhs()), 1 / e.rhs().value());
        } else {
          f.add_term(1, e);
        }
        break;
      case Op::Sqrt:
        f.add_term(1, e);
        break;
    }
    f.prune();
    return views_.emplace(e.id(), std::move(f).stored()).first->second;
  }

  Expr scaled_atom(const num::BigInt& k, const Expr& atom) {
    if (k == 1) return atom;
    return intern(Op::Mul, intern_leaf(BigRational(k)), atom);
  }

  Expr emit(LinearForm f) {
    f.prune();
    if (f.terms.empty()) return intern_leaf(f.constant);
    num::BigInt den = f.constant.get_den();
    for (const auto& [k, x] : f.terms) {
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), k.get_den_mpz_t());
    }
    const BigRational d(den);
    Expr acc;
    if (f.constant != 0) acc = intern_leaf(f.constant * d);
    for (const auto& [k, x] : f.terms) {
      const BigRational scaled = k * d;
      const num::BigInt n = scaled.get_num();
      if (!acc.valid()) {
        acc = scaled_atom(n, x);
      } else if (n > 0) {
        acc = intern(Op::Add, acc, scaled_atom(n, x));
      } else {
        acc = intern(Op::Sub, acc, scaled_atom(-n, x));
      }
    }
    if (den != 1) acc = intern(Op::Div, acc, intern_leaf(d));
    // Record the form so later views do not re-walk the chain.
    views_.emplace(acc.id(), std::move(f).stored());
    return acc;
  }

  Expr simplify_sqrt_of_rational(const BigRational& q) {
    if (q < 0) return intern(Op::Sqrt, intern_leaf(q), Expr());
    // sqrt(a/b) = sqrt(a*b)/b, then pull out square factors of a*b.
    const num::BigInt ab = q.get_num() * q.get_den();
    auto [outside, inside] = split_square(ab);
    const BigRational coeff = num::make_rational(outside, q.get_den());
    if (inside == 1) return intern_leaf(coeff);
    LinearForm f;
    f.add_term(coeff, intern(Op::Sqrt, intern_leaf(BigRational(inside)), Expr()));
    return emit(std::move(f));
  }

  Expr normal(const Expr& e) {
    if (auto it = done_.find(e.id()); it != done_.end()) return it->second;
    Expr out;
    switch (e.op()) {
      case Op::Leaf:
        out = intern_leaf(e.value());
        break;
      case Op::Add:
      case Op::Sub: {
        const Expr a = normal(e.lhs()), b = normal(e.rhs());
        LinearForm f = linear_view(a);
        f.add(linear_view(b), e.op() == Op::Add ? 1 : -1);
        out = emit(std::move(f));
        break;
      }
      case Op::Mul: {
        const Expr a = normal(e.lhs()), b = normal(e.rhs());
        if (a.is_leaf() || b.is_leaf()) {
          LinearForm f;
          f.add(linear_view(a.is_leaf() ? b : a), a.is_leaf() ? a.value() : b.value());
          out = emit(std::move(f));
        } else {
          const LinearForm fa = linear_view(a);
          const LinearForm fb = linear_view(b);
          out = fa.terms.size() * fb.terms.size() <= kExpandLimit ? expand_product(fa, fb)
                                                                   : intern(Op::Mul, a, b);
        }
        break;
      }
      case Op::Div: {
        const Expr a = normal(e.lhs()), b = normal(e.rhs());
        if (b.is_leaf() && b.value() != 0) {
          LinearForm f;
          f.add(linear_view(a), 1 / b.value());
          out = emit(std::move(f));
        } else {
          out = intern(Op::Div, a, b);
        }
        break;
      }
      case Op::Sqrt: {
        const Expr a = normal(e.child());
        out = a.is_leaf() ? simplify_sqrt_of_rational(a.value()) : intern(Op::Sqrt, a, Expr());
        break;
      }
    }
    done_.emplace(e.id(), out);
    return out;
  }

  std::map<std::string, Expr> leaves_;
  std::map<Key, Expr> nodes_;
  std::unordered_map<const Node*, std::size_t> order_;
  std::unordered_map<const Node*, LinearForm> views_;
  std::unordered_map<const Node*, Expr> done_;
};

}  // namespace

Expr simplify(const Expr& e) { return Simplifier().run(e); }

}  // namespace gauss::radical
