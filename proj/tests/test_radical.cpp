#include <doctest.h>

#include <random>

#include "gauss/error.hpp"
#include "gauss/radical.hpp"
#include "support/oracle.hpp"

using namespace gauss;
using namespace gauss::radical;
using num::BigRational;
using num::make_rational;
using num::Precision;

namespace {

Expr golden_ratio_cos() { return (Expr(-1) + sqrt(Expr(5))) / Expr(4); }

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no exception");
  return ErrorKind::Timeout;
}

BigRational pow2(long e) {
  BigRational r(1);
  if (e >= 0) mpq_mul_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<mp_bitcnt_t>(e));
  else mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<mp_bitcnt_t>(-e));
  return r;
}

}  // namespace

TEST_CASE("evaluation examples") {
  const auto leaf = eval_interval(Expr(make_rational(3, 4)));
  CHECK(leaf.is_point());
  CHECK(leaf.lo().to_rational() == make_rational(3, 4));

  const auto v = eval_interval(golden_ratio_cos(), Precision{128});
  CHECK(oracle::meets(v, oracle::cos_bracket(1, 5)));
  CHECK(v.width().to_rational() <= pow2(-127));
  CHECK(num::format_interval(v, 15) == "[0.309016994374947, 0.309016994374948]");
}

TEST_CASE("evaluation errors") {
  CHECK(kind_of([] { (void)eval_interval(sqrt(Expr(-1))); }) == ErrorKind::SqrtOfNegative);
  CHECK(kind_of([] { (void)eval_interval(Expr(1) / (Expr(1) - Expr(1))); }) ==
        ErrorKind::DivByZeroInterval);
  const Expr zero_ish = sqrt(Expr(2)) - sqrt(Expr(2));
  CHECK(kind_of([&] { (void)eval_interval(Expr(1) / zero_ish, Precision{64}, 1024); }) ==
        ErrorKind::DivByZeroInterval);
  CHECK(kind_of([&] { (void)eval_interval(sqrt(zero_ish), Precision{64}, 1024); }) ==
        ErrorKind::PrecisionCapExceeded);
}

TEST_CASE("evaluation is monotone in precision") {
  const Expr e = sqrt(Expr(2) + sqrt(Expr(3))) / (Expr(7) - sqrt(Expr(11)));
  auto prev = eval_interval(e, Precision{32});
  for (unsigned bits : {64u, 128u, 256u, 512u}) {
    const auto next = eval_interval(e, Precision{bits});
    CHECK(prev.contains(next));
    prev = next;
  }
}

TEST_CASE("interval containment against MPFR on random expressions") {
  std::mt19937_64 rng(1234);
  int checked = 0;
  for (int i = 0; i < 2000; ++i) {
    const Expr e = oracle::random_expr(rng, 4);
    const auto ref = oracle::evaluate(e);
    if (!ref) continue;
    try {
      const auto v = eval_interval(e, Precision{128}, 4096);
      if (!oracle::meets(v, oracle::around(*ref))) FAIL(serialize(e, Format::Sexpr));
      ++checked;
    } catch (const Error& err) {
      FAIL(serialize(e, Format::Sexpr) << ": " << err.what());
    }
  }
  CHECK(checked > 1000);
}

TEST_CASE("simplify examples") {
  CHECK(structurally_equal(simplify(sqrt(Expr(4))), Expr(2)));
  const Expr x = sqrt(Expr(3));
  CHECK(structurally_equal(simplify(Expr(1) * x), x));
  CHECK(structurally_equal(simplify(x + Expr(0)), x));
  CHECK(serialize(simplify(sqrt(Expr(8))), Format::Text) == "2*sqrt(2)");
  CHECK(serialize(simplify(sqrt(Expr(make_rational(1, 2)))), Format::Text) == "sqrt(2)/2");
  CHECK(serialize(simplify(sqrt(Expr(make_rational(9, 4)))), Format::Text) == "3/2");
  CHECK(serialize(simplify(x * x), Format::Text) == "3");
  CHECK(serialize(simplify((Expr(1) + x) * (Expr(1) - x)), Format::Text) == "-2");
  CHECK(serialize(simplify(x + x - Expr(2) * x + Expr(make_rational(1, 3))), Format::Text) ==
        "1/3");
  CHECK(serialize(simplify(golden_ratio_cos()), Format::Text) == "(-1 + sqrt(5))/4");
}

TEST_CASE("simplify preserves value") {
  std::mt19937_64 rng(99);
  int checked = 0;
  for (int i = 0; i < 1000; ++i) {
    const Expr e = oracle::random_expr(rng, 4);
    if (!oracle::evaluate(e)) continue;
    const auto before = eval_interval(e, Precision{128}, 4096);
    const auto after = eval_interval(simplify(e), Precision{128}, 4096);
    if (!before.intersects(after)) FAIL(serialize(e, Format::Sexpr));
    ++checked;
  }
  CHECK(checked > 500);
}

TEST_CASE("serialization formats") {
  const Expr e = golden_ratio_cos();
  CHECK(serialize(e, Format::Text) == "(-1 + sqrt(5))/4");
  CHECK(serialize(e, Format::Latex) == "\\frac{-1+\\sqrt{5}}{4}");
  CHECK(serialize(e, Format::Sexpr) == "(div (add -1 (sqrt 5)) 4)");
  CHECK(serialize(Expr(make_rational(-3, 7)), Format::Sexpr) == "-3/7");
  CHECK(serialize(Expr(2) - (Expr(3) - Expr(4)), Format::Text) == "2 - (3 - 4)");
  CHECK(serialize(Expr(2) * (Expr(3) + Expr(4)), Format::Text) == "2*(3 + 4)");
  CHECK(serialize(Expr(2) / (Expr(3) * Expr(4)), Format::Text) == "2/(3*4)");
}

TEST_CASE("s-expression parsing") {
  CHECK(structurally_equal(parse_sexpr("(sqrt 2)"), sqrt(Expr(2))));
  CHECK(structurally_equal(parse_sexpr("  ( div (add -1 (sqrt 5))\n 4 ) "), golden_ratio_cos()));
  CHECK(parse_sexpr("6/4").value() == make_rational(3, 2));
  const std::pair<const char*, std::size_t> bad[] = {
      {"(sqrt", 5}, {"(foo 1 2)", 1}, {"1/0", 0}, {"(add 1)", 6}, {"1 2", 2}, {"", 0}, {")", 0}};
  for (const auto& [text, pos] : bad) {
    CAPTURE(text);
    try {
      (void)parse_sexpr(text);
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.kind() == ErrorKind::ParseError);
      CHECK(e.position() == pos);
    }
  }
}

TEST_CASE("s-expression round trip") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 500; ++i) {
    const Expr e = oracle::random_expr(rng, 5);
    const Expr back = parse_sexpr(serialize(e, Format::Sexpr));
    if (!structurally_equal(back, e)) FAIL(serialize(e, Format::Sexpr));
  }
}

TEST_CASE("size measures") {
  const Expr s = sqrt(Expr(2));
  const Expr shared = s * s + s;
  CHECK(dag_size(shared) == 4);
  CHECK(tree_size(shared) == 8);
  CHECK(tree_size(shared, 3) == 3);
  CHECK(sqrt_depth(sqrt(Expr(1) + sqrt(Expr(2)))) == 2);
  CHECK(sqrt_depth(Expr(4)) == 0);
}
