#include <doctest.h>

#include "gauss/criterion.hpp"
#include "gauss/error.hpp"
#include "gauss/modular.hpp"
#include "gauss/synthesis.hpp"
#include "support/oracle.hpp"

using namespace gauss;
using namespace gauss::periods;
using radical::Expr;
using radical::Format;

namespace {

PeriodTree tree_for(std::uint64_t p) { return build_period_tree(p, modular::primitive_root(p)); }

BigRational pow2(long e) {
  BigRational r(1);
  if (e >= 0) mpq_mul_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<mp_bitcnt_t>(e));
  else mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<mp_bitcnt_t>(-e));
  return r;
}

}  // namespace

TEST_CASE("tree shapes") {
  const auto t5 = tree_for(5);
  CHECK(t5.depth() == 1);
  CHECK(t5.node(Label("0")).terms == std::vector<std::uint64_t>{1, 4});
  CHECK(t5.node(Label("1")).terms == std::vector<std::uint64_t>{2, 3});

  const auto t3 = tree_for(3);
  CHECK(t3.depth() == 0);
  CHECK(t3.node(Label()).terms == std::vector<std::uint64_t>{1, 2});
  CHECK(t3.node(Label()).value.contains(BigRational(-1)));

  const auto t17 = tree_for(17);
  CHECK(t17.depth() == 3);
  std::vector<std::uint64_t> even;
  for (std::uint64_t e = 0; e < 16; e += 2) even.push_back(modular::mod_pow(3, e, 17));
  CHECK(t17.node(Label("0")).terms == even);
  CHECK(t17.level(3).size() == 8);
  // f-periods are eps^s + eps^-s.
  for (const auto& w : t17.level(3)) {
    const auto& t = t17.node(w).terms;
    REQUIRE(t.size() == 2);
    CHECK(t[0] + t[1] == 17);
  }
  CHECK(t17.log(3) == 1);
  CHECK(t17.class_of(9, 1) == Label("0"));
}

TEST_CASE("tree errors") {
  try {
    (void)tree_for(13);
    FAIL("expected NotFermatPrime");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotFermatPrime);
  }
  CHECK_THROWS_AS(build_period_tree(17, 2), std::invalid_argument);
  CHECK_NOTHROW(build_period_tree(17, 5));
  const auto t5 = tree_for(5);
  try {
    (void)sibling_product(t5, Label("0"));
    FAIL("expected NoChildren");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NoChildren);
  }
}

TEST_CASE("sibling products from counting") {
  CHECK(sibling_product(tree_for(5), Label()).constant == -1);
  const auto t17 = tree_for(17);
  const auto root = sibling_product(t17, Label());
  CHECK(root.constant == -4);
  CHECK(root.coefficients.empty());
  const auto level0 = sibling_product(t17, Label("0"));
  CHECK(level0.constant == 0);
  CHECK(level0.coefficient_sum() == 2);
  CHECK(sibling_product(t17, Label("1")).coefficient_sum() == 2);
  const auto t257 = tree_for(257);
  CHECK(sibling_product(t257, Label()).constant == -64);
  CHECK(sibling_product(t257, Label("0")).coefficient_sum() == 32);
  CHECK(sibling_product(t257, Label("1")).coefficient_sum() == 32);
}

TEST_CASE("counting equals cyclotomic multiplication at every node") {
  for (std::uint64_t p : {5ULL, 17ULL, 257ULL}) {
    const auto tree = tree_for(p);
    for (std::size_t len = 0; len < tree.depth(); ++len) {
      for (const auto& w : tree.level(len)) {
        const auto lc = sibling_product(tree, w);
        CHECK(lc == sibling_product(tree, w, Exec::Serial));
        CHECK(lc.to_cyclo(tree) == period_cyclo(tree, w.child(0)) * period_cyclo(tree, w.child(1)));
      }
    }
  }
}

TEST_CASE("sibling sums, exactly and numerically") {
  for (std::uint64_t p : {5ULL, 17ULL, 257ULL}) {
    const auto tree = tree_for(p);
    for (std::size_t len = 0; len < tree.depth(); ++len) {
      for (const auto& w : tree.level(len)) {
        CHECK(period_cyclo(tree, w.child(0)) + period_cyclo(tree, w.child(1)) ==
              period_cyclo(tree, w));
        const auto sum = num::add(tree.node(w.child(0)).value, tree.node(w.child(1)).value,
                                  num::Precision{128});
        CHECK(sum.intersects(tree.node(w).value));
      }
    }
  }
}

TEST_CASE("radical synthesis for Fermat primes") {
  CHECK(serialize(synthesize_radical(3), Format::Text) == "-1/2");
  CHECK(radical::structurally_equal(synthesize_radical(3), Expr(num::make_rational(-1, 2))));
  const auto e5 = synthesize_radical(5);
  CHECK(serialize(e5, Format::Text) == "(-1 + sqrt(5))/4");
  for (std::uint64_t p : {5ULL, 17ULL, 257ULL}) {
    CAPTURE(p);
    const auto synth = synthesize_periods(p);
    const auto v = radical::eval_interval(synth.cos_expr, num::Precision{128});
    CHECK(oracle::meets(v, oracle::cos_bracket(1, p)));
    CHECK(v.width().to_rational() <= pow2(-100));
    CHECK(radical::sqrt_depth(synth.cos_expr) == cyclo::fermat_exponent(p) - 1);
    for (const auto& [w, step] : synth.steps) {
      CHECK(step.discriminant_value.lo().sign() > 0);
    }
    // Every node got an expression enclosing its direct value.
    for (const auto& [w, node] : synth.tree.nodes()) {
      REQUIRE(node.expr.has_value());
      CHECK(radical::eval_interval(*node.expr, num::Precision{96}).intersects(node.value));
    }
  }
}

TEST_CASE("p = 17 round trip through s-expressions") {
  const auto e = synthesize_radical(17);
  CHECK(radical::structurally_equal(radical::parse_sexpr(serialize(e, Format::Sexpr)), e));
}

TEST_CASE("p = 65537 needs the opt-in") {
  CHECK_THROWS_AS(synthesize_radical(65537), std::invalid_argument);
}

TEST_CASE("composition for general n") {
  CHECK(serialize(synthesize_cos(4), Format::Text) == "0");
  CHECK(serialize(synthesize_cos(1), Format::Text) == "1");
  CHECK(serialize(synthesize_cos(2), Format::Text) == "-1");
  CHECK(serialize(synthesize_cos(3), Format::Text) == "-1/2");
  CHECK(serialize(synthesize_cos(6), Format::Text) == "1/2");
  CHECK(serialize(synthesize_cos(8), Format::Text) == "sqrt(2)/2");
  for (std::uint64_t n = 1; n <= 120; ++n) {
    if (!criterion::is_constructible(n).constructible) continue;
    CAPTURE(n);
    const auto v = radical::eval_interval(synthesize_cos(n), num::Precision{128});
    CHECK(oracle::meets(v, oracle::cos_bracket(1, n)));
    CHECK(v.width().to_rational() <= pow2(-100));
  }
}

TEST_CASE("composition refuses non-constructible n") {
  for (std::uint64_t n : {7ULL, 9ULL, 13ULL, 289ULL}) {
    try {
      (void)synthesize_cos(n);
      FAIL("expected NotConstructible");
    } catch (const NotConstructibleError& e) {
      CHECK(e.kind() == ErrorKind::NotConstructible);
      CHECK_FALSE(e.verdict().constructible);
      CHECK(e.verdict().n == n);
    }
  }
}
