#include <doctest.h>

#include "carext/algebra.hpp"
#include "carext/generators.hpp"

using namespace carext;

namespace {

Element fin(const AlgebraConfig& cfg, std::uint64_t bits) {
  return Element(cfg, FiniteSubset{bits});
}

}  // namespace

TEST_CASE("finite weighted config validates its weights") {
  CHECK_THROWS_AS(AlgebraConfig::finite_weighted({Rational(1, 2), Rational(0)}),
                  std::invalid_argument);
  CHECK_THROWS_AS(AlgebraConfig::finite_weighted({Rational(-1, 3)}), std::invalid_argument);
  CHECK_THROWS_AS(AlgebraConfig::finite_weighted(std::vector<Rational>(65, Rational(1))),
                  std::invalid_argument);
  const auto cfg = AlgebraConfig::finite_weighted({Rational(1, 2), Rational(1, 3)});
  CHECK(cfg.total_mass() == Rational(5, 6));
  CHECK(cfg.atom_count() == 2);
  CHECK(cfg.kind() == AlgebraConfig::Kind::FiniteWeighted);
}

TEST_CASE("finite subset operations are bitwise") {
  const auto cfg =
      AlgebraConfig::finite_weighted({Rational(1), Rational(2), Rational(1, 4)});
  const Element a = fin(cfg, 0b011);
  const Element b = fin(cfg, 0b110);
  CHECK(unite(a, b) == fin(cfg, 0b111));
  CHECK(intersect(a, b) == fin(cfg, 0b010));
  CHECK(symm_diff(a, b) == fin(cfg, 0b101));
  CHECK(difference(a, b) == fin(cfg, 0b001));
  CHECK(complement(a) == fin(cfg, 0b100));
  CHECK(measure(a) == Rational(3));
  CHECK(distance(a, b) == Rational(5, 4));
  CHECK(subset_of(intersect(a, b), a));
  CHECK_FALSE(subset_of(a, b));
  CHECK(Element::universe(cfg) == fin(cfg, 0b111));
  CHECK(Element::empty(cfg).is_empty());
}

TEST_CASE("mixing configs throws ConfigMismatch") {
  const auto interval = AlgebraConfig::interval_unit();
  const auto finite = AlgebraConfig::finite_weighted({Rational(1)});
  const Element a = Element::universe(interval);
  const Element b = Element::universe(finite);
  CHECK_THROWS_AS(unite(a, b), ConfigMismatch);
  CHECK_THROWS_AS(distance(a, b), ConfigMismatch);
  // Two independently built configs with equal data are the same algebra.
  const auto finite2 = AlgebraConfig::finite_weighted({Rational(1)});
  CHECK(finite == finite2);
  CHECK(unite(b, Element::universe(finite2)) == b);
}

TEST_CASE("interval elements wrap canonical interval sets") {
  const auto cfg = AlgebraConfig::interval_unit();
  const Element u = Element::universe(cfg);
  CHECK(measure(u) == Rational(1));
  CHECK(complement(u).is_empty());
  Rng rng(13);
  for (int t = 0; t < 100; ++t) {
    const Element a = random_element(rng, cfg);
    const Element b = random_element(rng, cfg);
    CHECK(distance(a, b) == measure(symm_diff(a, b)));
    CHECK(symm_diff(a, b) == unite(difference(a, b), difference(b, a)));
    CHECK(unite(a, complement(a)) == u);
    CHECK(intersect(a, complement(a)).is_empty());
  }
}
