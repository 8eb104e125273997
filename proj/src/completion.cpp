#include "carext/completion.hpp"

#include <algorithm>
#include <array>
#include <memory>
#include <mutex>
#include <utility>
#include <vector>

namespace carext {

CauchyPoint constant_point(const Element& a) {
  return CauchyPoint{a.config(), [a](Index) { return a; }, [](Index) { return Index{0}; },
                     "const"};
}

CauchyPoint zero_point(const AlgebraConfig& cfg) {
  CauchyPoint p = constant_point(Element::empty(cfg));
  p.label = "empty";
  return p;
}

bool check_modulus(const CauchyPoint& x, Index depth) {
  // Offsets stay near the window's low end so that deep stages of expensive
  // families (fatcantor grows as 2^n intervals) remain evaluable.
  const std::array<std::pair<Index, Index>, 4> offsets{
      {{0, 1}, {0, 2}, {1, 3}, {0, std::min<Index>(depth, 6)}}};
  Index prev = 0;
  for (Index k = 0; k <= depth; ++k) {
    const Index m = x.modulus(k);
    if (m < prev) return false;  // modulus must be nondecreasing
    prev = m;
    const Rational bound = Rational::pow2(-k);
    for (auto [di, dj] : offsets) {
      if (di == dj) continue;
      if (distance(x.approximant(m + di), x.approximant(m + dj)) > bound) return false;
    }
  }
  return true;
}

FastPoint extract_fast(const CauchyPoint& x) {
  struct Cache {
    std::mutex mu;
    std::vector<Index> f;
  };
  auto cache = std::make_shared<Cache>();
  auto modulus = x.modulus;
  auto index = [cache, modulus](Index n) {
    std::scoped_lock lock(cache->mu);
    auto& f = cache->f;
    while (std::ssize(f) <= n) {
      Index next = modulus(std::ssize(f));
      if (!f.empty()) next = std::max(next, f.back() + 1);
      f.push_back(next);
    }
    return f[n];
  };
  auto base = x.approximant;
  CauchyPoint fast{x.config, [base, index](Index n) { return base(index(n)); },
                   [](Index k) { return k; }, x.label + "#fast"};
  return FastPoint{std::move(fast), index};
}

Enclosure dist_completion(const CauchyPoint& x, const CauchyPoint& y, Index depth) {
  if (!(x.config == y.config)) throw ConfigMismatch();
  if (depth < 1) throw std::invalid_argument("depth must be >= 1");
  const FastPoint fx = extract_fast(x), fy = extract_fast(y);
  const Rational a = distance(fx.approximant(depth), fy.approximant(depth));
  const Rational slack = Rational::pow2(-depth + 1);
  return Enclosure{max(Rational(0), a - slack), a + slack};
}

Enclosure measure_completion(const CauchyPoint& x, Index depth) {
  return dist_completion(x, zero_point(x.config), depth);
}

Enclosure equivalent_within(const CauchyPoint& x, const CauchyPoint& y, Index depth) {
  return dist_completion(x, y, depth);
}

CauchyPoint tail_shift(const CauchyPoint& x, Index shift) {
  if (shift < 0) throw std::invalid_argument("shift must be >= 0");
  auto base = x.approximant;
  auto modulus = x.modulus;
  return CauchyPoint{x.config, [base, shift](Index n) { return base(n + shift); },
                     [modulus, shift](Index k) { return std::max<Index>(0, modulus(k) - shift); },
                     x.label + "+" + std::to_string(shift)};
}

}  // namespace carext
