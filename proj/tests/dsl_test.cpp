#include <doctest.h>

#include "carext/dsl.hpp"
#include "carext/families.hpp"
#include "carext/generators.hpp"

using namespace carext;

namespace {

const AlgebraConfig kInterval = AlgebraConfig::interval_unit();

}  // namespace

TEST_CASE("parse and print round-trip the grammar examples") {
  for (const char* text : {
           "[0,1/2) | [1/4,3/4)",
           "!([0,1/3) & [1/4,1))",
           "fatcantor \\ [0,1/2)",
           "dyadicblocks(3) | perturb(17)",
           "{a0,a2} & {a1,a2}",
           "{}",
           "[0,1) \\ [1/3,2/3) \\ [0,1/8)",
       }) {
    const ExprPtr e = parse(text);
    const std::string printed = print(*e);
    CHECK(parse(printed)->identical(*e));
    CHECK(print(*parse(printed)) == printed);
  }
}

TEST_CASE("precedence: '&' binds tighter than '|' and '\\', '!' tightest") {
  const ExprPtr e = parse("[0,1/4) | [1/4,1/2) & ![1/3,1)");
  REQUIRE(e->kind == Expr::Kind::Union);
  CHECK(e->b->kind == Expr::Kind::Intersect);
  CHECK(e->b->b->kind == Expr::Kind::Complement);
  const ExprPtr left = parse("[0,1) \\ [0,1/2) \\ [1/2,3/4)");
  CHECK(left->a->kind == Expr::Kind::Diff);  // left-assoc
}

TEST_CASE("parse errors carry line and column") {
  try {
    parse("!");
    FAIL("expected ParseError");
  } catch (const ParseError& err) {
    CHECK(err.line == 1);
    CHECK(err.column == 2);
  }
  CHECK_THROWS_AS(parse("[0,1/2"), ParseError);
  CHECK_THROWS_AS(parse("[0,1/0)"), ParseError);
  CHECK_THROWS_AS(parse(""), ParseError);
  CHECK_THROWS_AS(parse("[0,1/2) |"), ParseError);
}

TEST_CASE("eval_element on literal trees") {
  const Element e = eval_element(*parse("[0,1/2) | [1/4,3/4)"), kInterval);
  CHECK(e.intervals() ==
        IntervalSet::canonicalize({{Rational(0), Rational(3, 4)}}));
  // Reversed endpoints parse fine but fail at evaluation.
  CHECK_THROWS_AS(eval_element(*parse("[1/2,1/4)"), kInterval), std::domain_error);
  CHECK_THROWS_AS(eval_element(*parse("fatcantor"), kInterval), std::invalid_argument);

  const auto finite =
      AlgebraConfig::finite_weighted({Rational(1), Rational(2), Rational(3)});
  const Element f = eval_element(*parse("{a0,a2} & !{a0}"), finite);
  CHECK(f.atoms().bits == 0b100);
  CHECK_THROWS_AS(eval_element(*parse("{a7}"), finite), std::invalid_argument);
}

TEST_CASE("eval_family examples") {
  CHECK(eval_family("fatcantor", {}).approximant(1) ==
        Element(kInterval, fatcantor_stage(1)));
  CHECK(fatcantor_stage(1) ==
        IntervalSet::canonicalize({{Rational(0), Rational(3, 8)},
                                   {Rational(5, 8), Rational(1)}}));
  CHECK(eval_family("increasing", {}).approximant(2) ==
        Element(kInterval, IntervalSet::canonicalize({{Rational(0), Rational(3, 4)}})));
  CHECK(eval_family("dyadicblocks", {Rational(1)}).approximant(0) ==
        Element(kInterval,
                IntervalSet::canonicalize({{Rational(1, 2), Rational(3, 4)}})));
  CHECK(eval_family("perturb", {Rational(17)}).approximant(4) ==
        eval_family("perturb", {Rational(17)}).approximant(4));
  CHECK_THROWS_AS(eval_family("nope", {}), std::invalid_argument);
  CHECK_THROWS_AS(eval_family("dyadicblocks", {Rational(1, 2)}), std::invalid_argument);
}

TEST_CASE("eval_point composes families with pointwise operations") {
  const CauchyPoint p = eval_point(*parse("fatcantor & [0,1/2)"), kInterval);
  CHECK(check_modulus(p, 8));
  const Enclosure m = measure_completion(p, 12);
  CHECK(m.contains(Rational(1, 4)));
  const CauchyPoint lit = eval_point(*parse("[0,1/3)"), kInterval);
  CHECK(lit.approximant(9) ==
        Element(kInterval, IntervalSet::canonicalize({{Rational(0), Rational(1, 3)}})));
}

TEST_CASE("random expressions round-trip through print") {
  Rng rng(55);
  for (int t = 0; t < 300; ++t) {
    const ExprPtr e = random_expr(rng);
    const std::string printed = print(*e);
    CHECK(parse(printed)->identical(*e));
    CHECK(print(*parse(printed)) == printed);
  }
}
