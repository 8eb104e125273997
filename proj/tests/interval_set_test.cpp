#include <doctest.h>

#include <algorithm>

#include "carext/generators.hpp"
#include "carext/interval_set.hpp"

using namespace carext;

namespace {

IntervalSet make(std::initializer_list<std::pair<Rational, Rational>> parts) {
  std::vector<Interval> raw;
  for (const auto& [lo, hi] : parts) raw.push_back({lo, hi});
  return IntervalSet::canonicalize(std::move(raw));
}

// Endpoint-sweep oracle: on each cell between consecutive breakpoints the
// membership of any boolean combination is constant, so evaluating the
// predicate at cell left ends reconstructs the combination independently of
// the production set operations.
template <class Pred>
IntervalSet sweep(const std::vector<const IntervalSet*>& sets, Pred pred) {
  std::vector<Rational> cuts{Rational(0), Rational(1)};
  for (const auto* s : sets)
    for (const auto& p : s->parts()) {
      cuts.push_back(p.lo);
      cuts.push_back(p.hi);
    }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  std::vector<Interval> raw;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
    if (pred(cuts[i])) raw.push_back({cuts[i], cuts[i + 1]});
  return IntervalSet::canonicalize(std::move(raw));
}

}  // namespace

TEST_CASE("canonicalize merges, sorts and drops degenerate intervals") {
  CHECK(make({{Rational(0), Rational(1, 2)}, {Rational(1, 2), Rational(3, 4)}}) ==
        make({{Rational(0), Rational(3, 4)}}));
  CHECK(make({{Rational(1, 4), Rational(1, 4)}}).empty());
  const IntervalSet sorted =
      make({{Rational(1, 2), Rational(3, 4)}, {Rational(0), Rational(1, 3)}});
  REQUIRE(sorted.parts().size() == 2);
  CHECK(sorted.parts()[0] == Interval{Rational(0), Rational(1, 3)});
  CHECK(sorted.parts()[1] == Interval{Rational(1, 2), Rational(3, 4)});
}

TEST_CASE("canonicalize rejects out-of-range endpoints") {
  CHECK_THROWS_AS(make({{Rational(-1, 8), Rational(1, 2)}}), std::domain_error);
  CHECK_THROWS_AS(make({{Rational(1, 2), Rational(9, 8)}}), std::domain_error);
  CHECK_THROWS_AS(make({{Rational(1, 2), Rational(1, 4)}}), std::domain_error);
}

TEST_CASE("set operation examples") {
  const IntervalSet a = make({{Rational(0), Rational(1, 2)}});
  const IntervalSet b = make({{Rational(1, 4), Rational(3, 4)}});
  CHECK(symm_diff(a, b) ==
        make({{Rational(0), Rational(1, 4)}, {Rational(1, 2), Rational(3, 4)}}));
  CHECK(symm_diff(a, a).empty());
  CHECK(complement(make({{Rational(0), Rational(1, 3)}, {Rational(1, 2), Rational(1)}})) ==
        make({{Rational(1, 3), Rational(1, 2)}}));
  CHECK(make({{Rational(0), Rational(3, 8)}, {Rational(5, 8), Rational(1)}}).measure() ==
        Rational(3, 4));
  CHECK(IntervalSet().measure() == Rational(0));
  CHECK(IntervalSet::unit().measure() == Rational(1));
}

TEST_CASE("operations agree with the endpoint-sweep oracle") {
  Rng rng(2024);
  for (int t = 0; t < 200; ++t) {
    const IntervalSet a = random_interval_set(rng, 8);
    const IntervalSet b = random_interval_set(rng, 8);
    const std::vector<const IntervalSet*> ab{&a, &b};
    CHECK(unite(a, b) ==
          sweep(ab, [&](const Rational& q) { return a.contains(q) || b.contains(q); }));
    CHECK(intersect(a, b) ==
          sweep(ab, [&](const Rational& q) { return a.contains(q) && b.contains(q); }));
    CHECK(symm_diff(a, b) ==
          sweep(ab, [&](const Rational& q) { return a.contains(q) != b.contains(q); }));
    CHECK(complement(a) == sweep({&a}, [&](const Rational& q) { return !a.contains(q); }));
  }
}

TEST_CASE("canonical uniqueness: split-and-shuffle refinements collapse back") {
  Rng rng(7);
  for (int t = 0; t < 100; ++t) {
    const IntervalSet s = random_interval_set(rng, 8);
    std::vector<Interval> refined;
    for (const auto& p : s.parts()) {
      const Rational mid = (p.lo + p.hi) / Rational(2);
      refined.push_back({mid, p.hi});
      refined.push_back({p.lo, mid});
      refined.push_back({mid, mid});
    }
    std::shuffle(refined.begin(), refined.end(), rng);
    CHECK(IntervalSet::canonicalize(refined) == s);
  }
}

TEST_CASE("measure is modular") {
  Rng rng(11);
  for (int t = 0; t < 200; ++t) {
    const IntervalSet a = random_interval_set(rng, 10);
    const IntervalSet b = random_interval_set(rng, 10);
    CHECK(unite(a, b).measure() + intersect(a, b).measure() == a.measure() + b.measure());
  }
}
