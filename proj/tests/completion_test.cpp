#include <doctest.h>

#include "carext/completion.hpp"
#include "carext/families.hpp"
#include "carext/generators.hpp"

using namespace carext;

namespace {

const AlgebraConfig kInterval = AlgebraConfig::interval_unit();

Element half() {
  return Element(kInterval, IntervalSet::canonicalize({{Rational(0), Rational(1, 2)}}));
}

}  // namespace

TEST_CASE("constant and zero points") {
  const CauchyPoint c = constant_point(half());
  CHECK(c.approximant(0) == half());
  CHECK(c.approximant(100) == half());
  CHECK(c.modulus(30) == 0);
  CHECK(check_modulus(c, 10));
  const Enclosure m = measure_completion(c, 10);
  CHECK(m.contains(Rational(1, 2)));
  CHECK(m.width() <= Rational::pow2(-8));
  const Enclosure z = measure_completion(zero_point(kInterval), 10);
  CHECK(z.contains(Rational(0)));
  CHECK(z.hi <= Rational::pow2(-9));
}

TEST_CASE("check_modulus rejects a corrupted modulus") {
  // dyadicblocks-style moving mass: approximant i sits on a block of length
  // 2^-i-1 at shifting positions, so a modulus claiming faster convergence
  // than the sequence delivers must be caught.
  CauchyPoint bad = increasing_point();
  bad.modulus = [](Index k) { return std::max<Index>(0, k - 2) / 8; };
  CHECK_FALSE(check_modulus(bad, 6));
  CHECK(check_modulus(increasing_point(), 6));
}

TEST_CASE("extract_fast is strictly increasing and honors the modulus") {
  const FastPoint fc = extract_fast(constant_point(half()));
  for (Index n = 0; n < 8; ++n) CHECK(fc.index(n) == n);

  CauchyPoint doubled = increasing_point();
  const FastPoint fi = extract_fast(doubled);
  Index prev = -1;
  for (Index n = 0; n < 10; ++n) {
    const Index i = fi.index(n);
    CHECK(i >= doubled.modulus(n));
    CHECK(i > prev);
    prev = i;
    // fast contract at this depth: stepping forward stays within 2^-n
    CHECK(distance(fi.approximant(n), fi.point.approximant(n + 3)) <= Rational::pow2(-n));
  }
}

TEST_CASE("distance enclosures nest and always intersect across depths") {
  const CauchyPoint x = fatcantor_point();
  const CauchyPoint y = increasing_point();
  Enclosure prev = dist_completion(x, y, 2);
  for (Index d = 3; d <= 12; ++d) {
    const Enclosure e = dist_completion(x, y, d);
    CHECK(e.width() <= Rational::pow2(-d + 2));
    CHECK(e.intersects(prev));
    prev = e;
  }
  CHECK_THROWS_AS(dist_completion(x, y, 0), std::invalid_argument);
  CHECK_THROWS_AS(dist_completion(x, zero_point(AlgebraConfig::finite_weighted({Rational(1)})), 4),
                  ConfigMismatch);
}

TEST_CASE("measure of the increasing family encloses 1") {
  const Enclosure m = measure_completion(increasing_point(), 12);
  CHECK(m.contains(Rational(1)));
  CHECK(m.width() <= Rational::pow2(-10));
}

TEST_CASE("tail shifts stay in the same equivalence class") {
  const CauchyPoint x = fatcantor_point();
  for (Index s : {1, 3, 7}) {
    const Enclosure e = equivalent_within(x, tail_shift(x, s), 12);
    CHECK(e.lo == Rational(0));
    CHECK(e.hi <= Rational::pow2(-10));
  }
}

TEST_CASE("random fast re-indexings represent the same point") {
  Rng rng(31);
  for (int t = 0; t < 20; ++t) {
    const CauchyPoint x = random_point(rng);
    const CauchyPoint g = random_fast_reindex(x, rng());
    CHECK(check_modulus(g, 8));
    const Enclosure e = equivalent_within(x, g, 10);
    CHECK(e.lo == Rational(0));
  }
}
