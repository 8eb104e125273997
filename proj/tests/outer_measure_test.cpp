#include <doctest.h>

#include "carext/families.hpp"
#include "carext/generators.hpp"
#include "carext/outer_measure.hpp"

using namespace carext;

TEST_CASE("cover examples") {
  const auto cfg = AlgebraConfig::interval_unit();
  const Element e(cfg, IntervalSet::canonicalize({{Rational(0), Rational(1, 2)}}));
  const Cover split{{Element(cfg, IntervalSet::canonicalize({{Rational(0), Rational(1, 3)}})),
                     Element(cfg, IntervalSet::canonicalize({{Rational(1, 4), Rational(2, 3)}}))}};
  CHECK(is_cover(e, split));
  CHECK(cover_cost(split) == Rational(3, 4));
  const Cover short_cover{{Element(cfg, IntervalSet::canonicalize({{Rational(0), Rational(1, 3)}}))}};
  CHECK_FALSE(is_cover(e, short_cover));
  CHECK_THROWS_AS(is_cover(e, Cover{}), std::invalid_argument);
}

TEST_CASE("outer measure of a fat Cantor stage") {
  const auto cfg = AlgebraConfig::interval_unit();
  const Element stage2(cfg, fatcantor_stage(2));
  CHECK(outer_measure_element(stage2) == Rational(5, 8));
  CHECK(outer_measure_element(Element::universe(cfg)) == Rational(1));
  CHECK(outer_measure_element(Element::empty(cfg)) == Rational(0));
}

TEST_CASE("outer measure lower bound, attainment and monotonicity") {
  Rng rng(21);
  const auto interval = AlgebraConfig::interval_unit();
  const auto finite =
      AlgebraConfig::finite_weighted({Rational(1, 2), Rational(1, 3), Rational(2)});
  for (const auto& cfg : {interval, finite}) {
    for (int t = 0; t < 100; ++t) {
      const Element e = random_element(rng, cfg);
      // Every cover costs at least mu(e); the singleton cover attains it.
      for (int c = 0; c < 10; ++c) {
        const Cover cov = random_cover(rng, e, 4);
        REQUIRE(is_cover(e, cov));
        CHECK(cover_cost(cov) >= outer_measure_element(e));
      }
      CHECK(cover_cost(Cover{{e}}) == outer_measure_element(e));
      // Monotone: e subset of (e union f) pushes mu* up.
      const Element f = random_element(rng, cfg);
      CHECK(outer_measure_element(e) <= outer_measure_element(unite(e, f)));
    }
  }
}
