#include "gauss/synthesis.hpp"

#include <stdexcept>
#include <tuple>
#include <utility>

#include "gauss/modular.hpp"

namespace gauss::periods {

using radical::Expr;

namespace {

constexpr std::uint64_t kLargestFermatPrime = 65537;
constexpr std::uint64_t kExactOracleLimit = 257;

Expr linear_expr(const LinearCombination& lc, const PeriodTree& tree) {
  Expr acc(lc.constant);
  for (const auto& [label, b] : lc.coefficients) {
    const Expr& x = *tree.node(label).expr;
    acc = b == 1 ? acc + x : acc + Expr(BigRational(b)) * x;
  }
  return acc;
}

enum class Choice { Plus, Minus, Undecided };

Choice choose(radical::Evaluator& ev, const Expr& plus, const Expr& minus,
              const DyadicInterval& target0, const DyadicInterval& target1) {
  const auto vp = ev.eval(plus);
  const auto vm = ev.eval(minus);
  if (!vp || !vm || !ev.certified() || vp->intersects(*vm)) return Choice::Undecided;
  const bool p0 = vp->intersects(target0);
  const bool m0 = vm->intersects(target0);
  if (p0 == m0) return Choice::Undecided;
  // The other root must then be the sibling.
  if (p0 && vm->intersects(target1)) return Choice::Plus;
  if (m0 && vp->intersects(target1)) return Choice::Minus;
  return Choice::Undecided;
}

void check_against_cos(const Expr& e, std::uint64_t n, Precision prec, unsigned cap) {
  const auto value = radical::eval_interval(e, prec, cap);
  const auto target = num::cos_two_pi(1, n, prec);
  if (!value.intersects(target)) {
    throw Error(ErrorKind::VerificationFailed,
                "expression for cos(2pi/" + std::to_string(n) + ") evaluates to " +
                    num::format_interval(value) + ", expected " + num::format_interval(target));
  }
}

}  // namespace

PeriodSynthesis synthesize_periods(std::uint64_t p, const SynthesisOptions& opts) {
  cyclo::fermat_exponent(p);
  if (p == kLargestFermatPrime && !opts.allow_65537) {
    throw std::invalid_argument("p = 65537 needs the explicit opt-in (large run)");
  }
  const std::uint64_t g = modular::primitive_root(p);
  PeriodSynthesis out{build_period_tree(p, g, opts.prec), {}, Expr(), opts.prec};
  PeriodTree& tree = out.tree;

  const auto report = [&](const std::string& msg) {
    if (opts.progress) opts.progress(msg);
  };
  report("period tree built");
  tree.node(Label()).expr = Expr(-1);
  Precision prec = opts.prec;
  radical::Evaluator ev(Precision{prec.bits + 32});

  for (std::size_t len = 0; len < tree.depth(); ++len) {
    for (const auto& w : tree.level(len)) {
      SiblingStep step;
      step.product = sibling_product(tree, w, opts.exec);
      if (opts.check_products && p <= kExactOracleLimit) {
        const auto direct = period_cyclo(tree, w.child(0)) * period_cyclo(tree, w.child(1));
        if (!(step.product.to_cyclo(tree) == direct)) {
          throw Error(ErrorKind::VerificationFailed,
                      "counted product differs from cyclo_mul under " + w.name());
        }
      }
      const Expr& s = *tree.node(w).expr;
      step.discriminant = s * s - Expr(4) * linear_expr(step.product, tree);
      const Expr root = radical::sqrt(step.discriminant);
      const Expr plus = (s + root) / Expr(2);
      const Expr minus = (s - root) / Expr(2);

      Choice c;
      while ((c = choose(ev, plus, minus, tree.node(w.child(0)).value,
                         tree.node(w.child(1)).value)) == Choice::Undecided) {
        prec = prec.doubled();
        if (prec.bits > opts.cap_bits) {
          throw Error(ErrorKind::PrecisionCapExceeded, "sign of " + w.child(0).name() +
                                                           " undecided at " +
                                                           std::to_string(opts.cap_bits) + " bits");
        }
        tree.refine_values(prec);
        ev = radical::Evaluator(Precision{prec.bits + 32});
      }
      step.sign = c == Choice::Plus ? 1 : -1;
      step.discriminant_value = *ev.eval(step.discriminant);
      tree.node(w.child(0)).expr = c == Choice::Plus ? plus : minus;
      tree.node(w.child(1)).expr = c == Choice::Plus ? minus : plus;
      out.steps.emplace(w, std::move(step));
    }
    report("level " + std::to_string(len + 1) + " solved at " + std::to_string(prec.bits) + " bits");
  }
  out.decided_at = prec;

  // f_1 = eps + eps^-1 is the class of g^0.
  const Label f1 = Label::from_value(0, tree.depth());
  out.cos_expr = radical::simplify(*tree.node(f1).expr / Expr(2));
  report("simplified");
  check_against_cos(out.cos_expr, p, opts.prec, opts.cap_bits);
  return out;
}

Expr synthesize_radical(std::uint64_t p, const SynthesisOptions& opts) {
  return synthesize_periods(p, opts).cos_expr;
}

NotConstructibleError::NotConstructibleError(criterion::ConstructibilityVerdict verdict)
    : Error(ErrorKind::NotConstructible,
            std::to_string(verdict.n) + "-gon: " +
                (verdict.obstruction ? criterion::describe(*verdict.obstruction) : "")),
      verdict_(std::move(verdict)) {}

namespace {

struct Angle {
  Expr c;
  Expr s;
};

Angle add_angles(const Angle& x, const Angle& y) {
  return {x.c * y.c - x.s * y.s, x.s * y.c + x.c * y.s};
}

// k * theta by double-and-add; negative k flips the sine.
Angle multiple(const Angle& base, std::int64_t k) {
  const bool negative = k < 0;
  std::uint64_t u = negative ? static_cast<std::uint64_t>(-k) : static_cast<std::uint64_t>(k);
  Angle acc{Expr(1), Expr(0)};
  Angle sq = base;
  bool first = true;
  while (u != 0) {
    if (u & 1) {
      acc = first ? sq : add_angles(acc, sq);
      first = false;
    }
    u >>= 1;
    if (u != 0) sq = add_angles(sq, sq);
  }
  if (negative) acc.s = Expr(0) - acc.s;
  return acc;
}

Angle prime_angle(std::uint64_t q, const SynthesisOptions& opts) {
  Expr c = synthesize_radical(q, opts);
  // 2pi/q lies in (0, pi) so the sine is the positive root.
  Expr s = radical::simplify(radical::sqrt(Expr(1) - c * c));
  return {c, s};
}

// a with a*q = 1 (mod M), reduced into (-M/2, M/2].
std::int64_t centered_inverse(std::int64_t q, std::int64_t M) {
  std::int64_t r0 = M, r1 = q % M, t0 = 0, t1 = 1;
  while (r1 != 0) {
    const std::int64_t k = r0 / r1;
    std::tie(r0, r1) = std::pair{r1, r0 - k * r1};
    std::tie(t0, t1) = std::pair{t1, t0 - k * t1};
  }
  std::int64_t a = ((t0 % M) + M) % M;
  if (2 * a > M) a -= M;
  return a;
}

}  // namespace

Expr synthesize_cos(std::uint64_t n, const SynthesisOptions& opts) {
  if (n == 0) throw std::invalid_argument("n must be positive");
  auto verdict = criterion::is_constructible(n);
  if (!verdict.constructible) throw NotConstructibleError(std::move(verdict));

  unsigned halvings = verdict.two_power_part;
  Expr c;
  if (verdict.fermat_prime_factors.empty()) {
    if (halvings == 0) return Expr(1);
    if (halvings == 1) return Expr(-1);
    c = Expr(0);
    halvings -= 2;
  } else {
    std::int64_t M = 1;
    Angle acc{Expr(1), Expr(0)};
    for (std::uint64_t q : verdict.fermat_prime_factors) {
      const Angle piece = prime_angle(q, opts);
      if (M == 1) {
        acc = piece;
      } else {
        // a*q + b*M = 1, so 2pi/(Mq) = a*(2pi/M) + b*(2pi/q).
        const auto qi = static_cast<std::int64_t>(q);
        const std::int64_t a = centered_inverse(qi, M);
        const std::int64_t b = (1 - a * qi) / M;
        acc = add_angles(multiple(acc, a), multiple(piece, b));
        acc = {radical::simplify(acc.c), radical::simplify(acc.s)};
      }
      M *= static_cast<std::int64_t>(q);
    }
    c = acc.c;
  }
  for (unsigned i = 0; i < halvings; ++i) {
    c = radical::sqrt((Expr(1) + c) / Expr(2));
  }
  c = radical::simplify(c);
  check_against_cos(c, n, opts.prec, opts.cap_bits);
  return c;
}

}  // namespace gauss::periods
