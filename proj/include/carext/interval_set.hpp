#pragma once

#include <vector>

#include "carext/rational.hpp"

namespace carext {

/// Half-open interval [lo, hi) inside the unit universe [0,1).
/// Stored intervals always satisfy 0 <= lo < hi <= 1; degenerate intervals
/// (lo == hi) are dropped during canonicalization, never stored.
struct Interval {
  Rational lo;
  Rational hi;

  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Canonical finite union of disjoint, non-adjacent intervals, sorted by lo.
/// Two IntervalSets describe the same point set iff their parts are identical,
/// so structural equality is set equality.
class IntervalSet {
public:
  IntervalSet() = default;

  const std::vector<Interval>& parts() const { return parts_; }
  bool empty() const { return parts_.empty(); }

  /// Total length, exact.
  Rational measure() const;

  /// Point membership under half-open semantics.
  bool contains(const Rational& q) const;

  friend bool operator==(const IntervalSet&, const IntervalSet&) = default;

  /// Sole entry point for raw data: sorts, drops degenerate intervals and
  /// merges overlapping or adjacent ones. Throws std::domain_error if an
  /// endpoint lies outside [0,1] or lo > hi.
  static IntervalSet canonicalize(std::vector<Interval> raw);

  static IntervalSet unit();  // the universe {[0,1)}

private:
  std::vector<Interval> parts_;
};

IntervalSet unite(const IntervalSet& a, const IntervalSet& b);
IntervalSet intersect(const IntervalSet& a, const IntervalSet& b);
IntervalSet complement(const IntervalSet& a);
IntervalSet difference(const IntervalSet& a, const IntervalSet& b);
IntervalSet symm_diff(const IntervalSet& a, const IntervalSet& b);

}  // namespace carext
