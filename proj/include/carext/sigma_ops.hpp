#pragma once

#include <functional>
#include <memory>
#include <variant>
#include <vector>

#include "carext/completion.hpp"

namespace carext {

/// How the tail of a countable union is controlled. The classical construction
/// picks N_L with mu*(union of members beyond N_L, minus the partial union)
/// small, but in general no computable rate exists; the caller must say what
/// is known:
///   - Increasing: the family is nested increasing; the tail defect is bounded
///     by total mass minus the partial union's measure, searched within an
///     internal cap.
///   - SummableBound: an explicit nonincreasing bound N -> Rational on mu-bar
///     of the tail union beyond N, decreasing to 0.
///   - SearchCap: no rate known; the total-mass bound is searched up to the
///     given cap, and exhaustion yields an explicit partial certification.
class TailCertificate {
public:
  struct Increasing {};
  struct SummableBound {
    std::function<Rational(Index)> bound;
  };
  struct SearchCap {
    Index cap;
  };

  static TailCertificate increasing() { return TailCertificate(Increasing{}); }
  static TailCertificate summable(std::function<Rational(Index)> bound) {
    return TailCertificate(SummableBound{std::move(bound)});
  }
  static TailCertificate search_cap(Index cap) { return TailCertificate(SearchCap{cap}); }

  const std::variant<Increasing, SummableBound, SearchCap>& variant() const { return v_; }

private:
  template <class T>
  explicit TailCertificate(T v) : v_(std::move(v)) {}
  std::variant<Increasing, SummableBound, SearchCap> v_;
};

/// Pointwise operations on the completion. Binary operations consume the fast
/// subsequences, so the result's modulus is closed-form: the new tail at index
/// n is 2^(-n) + 2^(-n), hence modulus(k) = k+1.
CauchyPoint union_pt(const CauchyPoint& x, const CauchyPoint& y);
CauchyPoint intersect_pt(const CauchyPoint& x, const CauchyPoint& y);

/// Complement preserves the modulus exactly (A symm_diff B equals the
/// symm_diff of the complements).
CauchyPoint complement_pt(const CauchyPoint& x);

/// Finite union of n points; approximants are shifted so the 2^(-k) modulus
/// contract survives the n-fold triangle inequality.
CauchyPoint finite_union_pt(const std::vector<CauchyPoint>& members);

/// Enclosure of lim mu(x_n intersect y_n); disjointness is asserted by the
/// caller when hi is below tolerance.
Enclosure disjoint_within(const CauchyPoint& x, const CauchyPoint& y, Index depth);

/// Enclosure of |mu-bar(x union y) - mu-bar(x) - mu-bar(y)|; contains 0 for
/// disjoint inputs.
Enclosure additivity_defect(const CauchyPoint& x, const CauchyPoint& y, Index depth);

/// Outcome of the Y_L construction. Certification happens lazily per stage;
/// after evaluating approximants, `fully_certified` reports whether every
/// evaluated stage met its 1/L budget, and `achieved_precision` the best
/// certified 1/L so far (total mass if none). A partial outcome is a truthful
/// result, distinguished from silent failure.
class CountableUnionResult {
public:
  CountableUnionResult(const CountableUnionResult&);
  CountableUnionResult& operator=(const CountableUnionResult&);
  ~CountableUnionResult();

  const CauchyPoint& point() const { return point_; }
  bool fully_certified() const;
  Rational achieved_precision() const;

  /// N_L actually chosen at an evaluated stage (0 if not evaluated).
  Index members_used(Index stage) const;

private:
  friend CountableUnionResult countable_union(std::function<CauchyPoint(Index)>,
                                              const TailCertificate&);
  struct State;
  CountableUnionResult(CauchyPoint point, std::shared_ptr<State> state);
  CauchyPoint point_;
  std::shared_ptr<State> state_;
};

/// The countable union as a completion point: the stage-L approximant is
/// Y_L = union over i < N_L of member i's fast approximant at K_L, with N_L
/// and K_L chosen so the certified tail term and the summed approximation
/// term are each below 1/(2L). The family is 0-indexed and must share one
/// config; stage L corresponds to approximant index L-1.
CountableUnionResult countable_union(std::function<CauchyPoint(Index)> family,
                                     const TailCertificate& cert);

}  // namespace carext
