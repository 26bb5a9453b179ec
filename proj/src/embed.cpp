#include <stdexcept>

#include "gauss/error.hpp"
#include "gauss/tower.hpp"

namespace gauss::tower {

namespace {

using cyclo::Label;
using periods::LinearCombination;
using periods::PeriodTree;

void check_deadline(const EmbedOptions& opts, std::size_t level) {
  if (opts.deadline && std::chrono::steady_clock::now() > *opts.deadline) {
    throw Error(ErrorKind::Timeout, "tower embedding stopped at level " + std::to_string(level));
  }
}

TowerElement combine(const LinearCombination& lc, const std::map<Label, TowerElement>& a,
                     const TowerContext& ctx) {
  TowerElement acc = ctx.rational(lc.constant);
  for (const auto& [label, b] : lc.coefficients) {
    acc = acc + scale(a.at(label), BigRational(b));
  }
  return acc;
}

// Write an element fixed by the level-L subgroup as constant + sum b_j A_j
// over level-L labels; the class holding eps^(p-1) carries coefficient 0 in
// the reduced basis.
LinearCombination decompose(const cyclo::CycloElement& c, const PeriodTree& tree, std::size_t L) {
  const auto gr = c.group_ring();
  LinearCombination lc;
  lc.constant = BigRational(gr[0]);
  for (const auto& j : tree.level(L)) {
    const auto& members = tree.node(j).terms;
    const auto& b = gr[members.front()];
    for (auto s : members) {
      if (gr[s] != b) {
        throw Error(ErrorKind::VerificationFailed,
                    "sibling-difference product not fixed at level " + std::to_string(L));
      }
    }
    if (b != 0) lc.coefficients.emplace(j, b);
  }
  return lc;
}

// +1 or -1 so that sign * x >= 0 under the real embedding.
int real_sign(const TowerElement& x) {
  for (unsigned bits = 64; bits <= 16384; bits *= 2) {
    const auto v = enclose(x, Precision{bits});
    if (v.lo().sign() > 0) return 1;
    if (v.hi().sign() < 0) return -1;
  }
  throw Error(ErrorKind::VerificationFailed, "sign of a square root coordinate undecided");
}

}  // namespace

TowerEmbedding embed_synthesis(const periods::PeriodSynthesis& synthesis,
                               const EmbedOptions& opts) {
  const PeriodTree& tree = synthesis.tree;
  auto ctx = TowerContext::create();
  TowerEmbedding out;
  out.context = ctx;
  out.periods.emplace(Label(), ctx->rational(-1));
  out.coefficient_bits_by_level.push_back(coefficient_bits(out.periods.at(Label())));

  const BigRational half(1, 2);
  for (std::size_t L = 0; L < tree.depth(); ++L) {
    check_deadline(opts, L);
    const auto labels = tree.level(L);
    const Label star = labels.front();
    const auto delta = [&](const Label& w) {
      return periods::period_cyclo(tree, w.child(0)) - periods::period_cyclo(tree, w.child(1));
    };
    const auto discriminant = [&](const Label& w, TowerElement& s, TowerElement& p) {
      s = out.periods.at(w);
      p = combine(synthesis.steps.at(w).product, out.periods, *ctx);
      return s * s - scale(p, BigRational(4)) ;
    };

    TowerElement s_star = ctx->rational(0), p_star = ctx->rational(0);
    const TowerElement a = discriminant(star, s_star, p_star);
    ctx->extend(a);
    const TowerElement t = ctx->generator(L + 1);
    const TowerElement a_inv = tower_inv(a);
    const auto delta_star = delta(star);

    std::size_t max_bits = 0;
    for (const auto& w : labels) {
      check_deadline(opts, L);
      TowerElement s = ctx->rational(0), p = ctx->rational(0);
      const TowerElement d = discriminant(w, s, p);
      TowerElement y = t;
      if (!(w == star)) {
        const auto c = decompose(delta(w) * delta_star, tree, L);
        y = combine(c, out.periods, *ctx) * a_inv * t;
        if (real_sign(y) < 0) y = -y;
        if (!(y * y).equals(d)) {
          throw Error(ErrorKind::VerificationFailed,
                      "discriminant under " + w.name() + " is not a square at level " +
                          std::to_string(L + 1));
        }
      }
      const int sign = synthesis.steps.at(w).sign;
      const TowerElement shift = scale(y, BigRational(sign) * half);
      const TowerElement r0 = scale(s, half) + shift;
      const TowerElement r1 = scale(s, half) - shift;
      for (const auto& r : {r0, r1}) {
        if (!verify_quadratic(r, s, p)) {
          throw Error(ErrorKind::VerificationFailed, "quadratic check failed under " + w.name());
        }
        ++out.quadratic_checks;
      }
      if (!conjugate(r0, L + 1).equals(r1)) {
        throw Error(ErrorKind::VerificationFailed, "conjugation does not swap children of " + w.name());
      }
      ++out.conjugation_checks;
      const auto v0 = enclose(r0);
      if (!v0.intersects(tree.node(w.child(0)).value)) {
        throw Error(ErrorKind::VerificationFailed,
                    w.child(0).name() + " embeds to " + num::format_interval(v0));
      }
      max_bits = std::max({max_bits, coefficient_bits(r0), coefficient_bits(r1)});
      out.periods.emplace(w.child(0), r0);
      out.periods.emplace(w.child(1), r1);
    }
    out.coefficient_bits_by_level.push_back(max_bits);
  }
  return out;
}

TowerEmbedding embed_synthesis(std::uint64_t p, const EmbedOptions& opts) {
  cyclo::fermat_exponent(p);
  if (p > 257) throw std::invalid_argument("tower embedding is limited to p <= 257");
  return embed_synthesis(periods::synthesize_periods(p), opts);
}

}  // namespace gauss::tower
