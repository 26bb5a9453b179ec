#include "gauss/periods.hpp"

#include <algorithm>
#include <stdexcept>

#include "gauss/error.hpp"
#include "gauss/kernels.hpp"
#include "gauss/modular.hpp"

namespace gauss::periods {

const PeriodNode& PeriodTree::node(const Label& w) const {
  const auto it = nodes_.find(w);
  if (it == nodes_.end()) throw Error(ErrorKind::BadLevel, "no period " + w.name());
  return it->second;
}

PeriodNode& PeriodTree::node(const Label& w) {
  const auto it = nodes_.find(w);
  if (it == nodes_.end()) throw Error(ErrorKind::BadLevel, "no period " + w.name());
  return it->second;
}

std::vector<Label> PeriodTree::level(std::size_t length) const {
  std::vector<Label> out;
  const std::uint64_t count = std::uint64_t{1} << length;
  out.reserve(count);
  for (std::uint64_t v = 0; v < count; ++v) out.push_back(Label::from_value(v, length));
  return out;
}

void PeriodTree::refine_values(Precision prec) {
  const num::TrigEvaluator trig(prec);
  const Precision sum_prec{prec.bits + 16};
  // f-periods from cosines, then parents as sums of their children.
  const auto leaves = level(depth());
  std::vector<std::uint64_t> residues;
  residues.reserve(leaves.size());
  for (const auto& w : leaves) residues.push_back(node(w).terms.front());
  const auto values = kernels::two_cos_enclosures_omp(trig, residues, p_);
  for (std::size_t i = 0; i < leaves.size(); ++i) node(leaves[i]).value = values[i];
  for (std::size_t len = depth(); len-- > 0;) {
    for (const auto& w : level(len)) {
      node(w).value = num::add(node(w.child(0)).value, node(w.child(1)).value, sum_prec);
    }
  }
  value_prec_ = prec;
}

PeriodTree build_period_tree(std::uint64_t p, std::uint64_t g, Precision prec) {
  const unsigned m = cyclo::fermat_exponent(p);
  if (g != modular::primitive_root(p)) {
    // Any primitive root works; verify the order rather than insisting on
    // the smallest one.
    for (const auto& [q, k] : modular::factorize(p - 1)) {
      if (modular::mod_pow(static_cast<std::int64_t>(g), (p - 1) / q, p) == 1) {
        throw std::invalid_argument(std::to_string(g) + " is not a primitive root mod " +
                                    std::to_string(p));
      }
    }
  }
  PeriodTree tree(p, g, m);
  tree.dlog_.assign(p, 0);
  std::uint64_t x = 1;
  for (std::uint64_t e = 0; e + 1 < p; ++e) {
    tree.dlog_[x] = static_cast<std::uint32_t>(e);
    x = x * g % p;
  }
  for (std::size_t len = 0; len <= tree.depth(); ++len) {
    for (const auto& w : tree.level(len)) {
      PeriodNode n;
      n.label = w;
      n.terms = cyclo::class_exponents(p, g, std::uint64_t{1} << len, w.value());
      tree.nodes_.emplace(w, std::move(n));
    }
  }
  tree.refine_values(prec);
  return tree;
}

cyclo::CycloElement period_cyclo(const PeriodTree& tree, const Label& w) {
  return cyclo::CycloElement::from_exponents(tree.p(), tree.node(w).terms);
}

cyclo::CycloElement LinearCombination::to_cyclo(const PeriodTree& tree) const {
  if (constant.get_den() != 1) {
    throw Error(ErrorKind::VerificationFailed, "non-integral constant in period product");
  }
  cyclo::CycloElement out = cyclo::CycloElement::constant(tree.p(), constant.get_num());
  for (const auto& [label, b] : coefficients) {
    if (b != 0) out = out + cyclo::cyclo_scale(period_cyclo(tree, label), b);
  }
  return out;
}

BigInt LinearCombination::coefficient_sum() const {
  BigInt s = 0;
  for (const auto& [label, b] : coefficients) s += b;
  return s;
}

LinearCombination sibling_product(const PeriodTree& tree, const Label& w, Exec exec) {
  if (!tree.has_children(w)) throw Error(ErrorKind::NoChildren, w.name() + " is a leaf");
  const auto& xs = tree.node(w.child(0)).terms;
  const auto& ys = tree.node(w.child(1)).terms;
  const std::uint64_t p = tree.p();
  const std::size_t L = w.size();
  const std::uint64_t class_size = (p - 1) >> L;

  // (s, alpha(s)) for every s with alpha(s) > 0, in increasing s.
  std::vector<std::pair<std::uint64_t, std::uint64_t>> alpha;
  if (xs.size() * ys.size() < p / 8) {
    std::vector<std::uint64_t> sums;
    sums.reserve(xs.size() * ys.size());
    for (auto a : xs) {
      for (auto b : ys) sums.push_back((a + b) % p);
    }
    std::sort(sums.begin(), sums.end());
    for (std::size_t i = 0; i < sums.size();) {
      std::size_t j = i;
      while (j < sums.size() && sums[j] == sums[i]) ++j;
      alpha.emplace_back(sums[i], j - i);
      i = j;
    }
  } else {
    const auto hist = exec == Exec::Parallel ? kernels::pair_sum_histogram_omp(xs, ys, p)
                                             : kernels::pair_sum_histogram_serial(xs, ys, p);
    for (std::uint64_t s = 0; s < p; ++s) {
      if (hist[s] != 0) alpha.emplace_back(s, hist[s]);
    }
  }

  LinearCombination lc;
  lc.constant = 0;
  // Group s by its level-L class; alpha must be constant on each class.
  std::map<Label, std::pair<std::uint64_t, std::uint64_t>> seen;  // value, members
  for (const auto& [s, count] : alpha) {
    if (s == 0) {
      lc.constant = BigRational(static_cast<unsigned long>(count));
      continue;
    }
    auto& [value, members] = seen[tree.class_of(s, L)];
    if (members != 0 && value != count) {
      throw Error(ErrorKind::VerificationFailed,
                  "alpha(s) not constant on class " + tree.class_of(s, L).name() + " under " +
                      w.name());
    }
    value = count;
    ++members;
  }
  for (const auto& [j, vm] : seen) {
    if (vm.second != class_size) {
      throw Error(ErrorKind::VerificationFailed,
                  "alpha(s) vanishes on part of class " + j.name() + " under " + w.name());
    }
    lc.coefficients.emplace(j, BigInt(static_cast<unsigned long>(vm.first)));
  }
  if (L == 0) {
    // The only level-0 period is the root, which equals -1.
    for (const auto& [label, b] : lc.coefficients) lc.constant -= b;
    lc.coefficients.clear();
  }
  return lc;
}

}  // namespace gauss::periods
