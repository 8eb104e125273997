#include "carext/families.hpp"

#include <mutex>
#include <random>
#include <vector>

namespace carext {

IntervalSet fatcantor_stage(Index n) {
  static std::mutex mu;
  static std::vector<IntervalSet> stages{IntervalSet::unit()};
  std::scoped_lock lock(mu);
  while (std::ssize(stages) <= n) {
    const Index s = std::ssize(stages);
    const Rational half_gap = Rational(1, BigInt(1) << static_cast<unsigned>(2 * s)) / Rational(2);
    std::vector<Interval> parts;
    parts.reserve(stages.back().parts().size() * 2);
    for (const auto& block : stages.back().parts()) {
      const Rational center = (block.lo + block.hi) / Rational(2);
      parts.push_back({block.lo, center - half_gap});
      parts.push_back({center + half_gap, block.hi});
    }
    stages.push_back(IntervalSet::canonicalize(std::move(parts)));
  }
  return stages[n];
}

CauchyPoint fatcantor_point() {
  const AlgebraConfig cfg = AlgebraConfig::interval_unit();
  return CauchyPoint{cfg,
                     [cfg](Index n) { return Element(cfg, fatcantor_stage(n)); },
                     [](Index k) { return k; }, "fatcantor"};
}

CauchyPoint increasing_point() {
  const AlgebraConfig cfg = AlgebraConfig::interval_unit();
  return CauchyPoint{cfg,
                     [cfg](Index i) {
                       Rational hi = Rational(1) - Rational(1, i + 2);
                       return Element(cfg, IntervalSet::canonicalize({{Rational(0), hi}}));
                     },
                     [](Index k) { return Index{1} << k; }, "increasing"};
}

CauchyPoint dyadicblocks_point(Index i) {
  if (i < 0) throw std::invalid_argument("dyadicblocks index must be >= 0");
  const AlgebraConfig cfg = AlgebraConfig::interval_unit();
  const Rational lo = Rational(1) - Rational::pow2(-i);
  const Rational hi = Rational(1) - Rational::pow2(-i - 1);
  CauchyPoint p = constant_point(Element(cfg, IntervalSet::canonicalize({{lo, hi}})));
  p.label = "dyadicblocks(" + std::to_string(i) + ")";
  return p;
}

CauchyPoint perturb_point(std::uint64_t seed) {
  const AlgebraConfig cfg = AlgebraConfig::interval_unit();
  auto approximant = [cfg, seed](Index n) {
    std::mt19937_64 rng(seed);
    // starting set: a few intervals on the /16 grid
    std::vector<Interval> init;
    for (int t = 0; t < 3; ++t) {
      const auto lo = static_cast<std::int64_t>(rng() % 16);
      const auto hi = lo + 1 + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(16 - lo));
      init.push_back({Rational(lo, 16), Rational(hi, 16)});
    }
    IntervalSet set = IntervalSet::canonicalize(std::move(init));
    for (Index t = 0; t < n; ++t) {
      const Index cells = Index{1} << (t + 2);
      const auto j = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(cells));
      IntervalSet step = IntervalSet::canonicalize(
          {{Rational(j, BigInt(cells)), Rational(j + 1, BigInt(cells))}});
      set = symm_diff(set, step);
    }
    return Element(cfg, set);
  };
  return CauchyPoint{cfg, std::move(approximant), [](Index k) { return k; },
                     "perturb(" + std::to_string(seed) + ")"};
}

}  // namespace carext
