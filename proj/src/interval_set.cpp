#include "carext/interval_set.hpp"

#include <algorithm>
#include <stdexcept>

namespace carext {

Rational IntervalSet::measure() const {
  Rational sum(0);
  for (const auto& p : parts_) sum += p.hi - p.lo;
  return sum;
}

bool IntervalSet::contains(const Rational& q) const {
  // parts are sorted and disjoint; find the first part with hi > q
  auto it = std::upper_bound(parts_.begin(), parts_.end(), q,
                             [](const Rational& v, const Interval& p) { return v < p.hi; });
  return it != parts_.end() && it->lo <= q;
}

IntervalSet IntervalSet::canonicalize(std::vector<Interval> raw) {
  const Rational zero(0), one(1);
  bool canonical = true;  // sorted, pairwise gapped, nondegenerate
  for (std::size_t i = 0; i < raw.size(); ++i) {
    const Interval& iv = raw[i];
    if (iv.lo < zero || iv.hi > one) throw std::domain_error("interval endpoint outside [0,1]");
    if (iv.hi < iv.lo) throw std::domain_error("interval with lo > hi");
    if (iv.lo == iv.hi || (i > 0 && !(raw[i - 1].hi < iv.lo))) canonical = false;
  }
  if (canonical) {
    IntervalSet out;
    out.parts_ = std::move(raw);
    return out;
  }
  std::erase_if(raw, [](const Interval& iv) { return iv.lo == iv.hi; });
  if (!std::is_sorted(raw.begin(), raw.end(),
                      [](const Interval& a, const Interval& b) { return a.lo < b.lo; }))
    std::sort(raw.begin(), raw.end(),
              [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  IntervalSet out;
  for (auto& iv : raw) {
    if (!out.parts_.empty() && iv.lo <= out.parts_.back().hi) {
      if (out.parts_.back().hi < iv.hi) out.parts_.back().hi = std::move(iv.hi);
    } else {
      out.parts_.push_back(std::move(iv));
    }
  }
  return out;
}

IntervalSet IntervalSet::unit() {
  return canonicalize({{Rational(0), Rational(1)}});
}

IntervalSet unite(const IntervalSet& a, const IntervalSet& b) {
  std::vector<Interval> merged;
  merged.reserve(a.parts().size() + b.parts().size());
  std::merge(a.parts().begin(), a.parts().end(), b.parts().begin(), b.parts().end(),
             std::back_inserter(merged),
             [](const Interval& x, const Interval& y) { return x.lo < y.lo; });
  return IntervalSet::canonicalize(std::move(merged));
}

IntervalSet intersect(const IntervalSet& a, const IntervalSet& b) {
  std::vector<Interval> out;
  std::size_t i = 0, j = 0;
  while (i < a.parts().size() && j < b.parts().size()) {
    const Interval& p = a.parts()[i];
    const Interval& q = b.parts()[j];
    Rational lo = max(p.lo, q.lo);
    const Rational& hi = min(p.hi, q.hi);
    if (lo < hi) out.push_back({std::move(lo), hi});
    if (p.hi <= q.hi) ++i; else ++j;
  }
  // intersection of canonical sets is already canonical
  return IntervalSet::canonicalize(std::move(out));
}

IntervalSet complement(const IntervalSet& a) {
  std::vector<Interval> out;
  Rational edge(0);
  for (const auto& p : a.parts()) {
    if (edge < p.lo) out.push_back({edge, p.lo});
    edge = p.hi;
  }
  if (edge < Rational(1)) out.push_back({std::move(edge), Rational(1)});
  return IntervalSet::canonicalize(std::move(out));
}

IntervalSet difference(const IntervalSet& a, const IntervalSet& b) {
  return intersect(a, complement(b));
}

IntervalSet symm_diff(const IntervalSet& a, const IntervalSet& b) {
  return unite(difference(a, b), difference(b, a));
}

}  // namespace carext
