#pragma once

#include <string>
#include <utility>
#include <vector>

#include "carext/sigma_ops.hpp"

namespace carext {

/// Output of F: the limsup of the fast approximants, represented by the fast
/// sequence itself plus a certified bound on mu*(approximant(n) symm_diff S).
/// For handles produced by apply_F the bound is exactly 2^(-n+1), obtained by
/// telescoping the 2^(-n) tail:
///   limsup symm_diff B_f(N)  is covered by  union over k >= N of
///   (B_f(k) symm_diff B_f(k+1)),  whose measures sum to at most 2^(-N+1).
/// Handles combined index-wise by the hom verifiers carry the summed bounds.
/// The limsup set itself is never materialized.
struct MeasurableHandle {
  FastPoint fast;
  std::function<Rational(Index)> bound;

  Element approximant(Index n) const { return fast.approximant(n); }
};

/// Verdict of a finite-depth membership or equality probe; Unknown is always
/// a permitted answer.
enum class ThreeValued { In, Out, Unknown };

/// F itself: fast-subsequence extraction wrapped with the telescoped bound.
/// Deterministic: the same point always yields the same f.
MeasurableHandle apply_F(const CauchyPoint& x);

/// Index-wise Element operations on the fast approximant streams.
MeasurableHandle handle_union(const MeasurableHandle& s, const MeasurableHandle& t);
MeasurableHandle handle_intersect(const MeasurableHandle& s, const MeasurableHandle& t);
MeasurableHandle handle_complement(const MeasurableHandle& s);

/// Enclosure of mu*(S symm_diff T): center is the distance of the two
/// depth-indexed approximants, radius the sum of the two bounds at depth.
Enclosure handle_distance(const MeasurableHandle& s, const MeasurableHandle& t, Index depth);

/// A.e. equality at finite depth: In when the distance enclosure is below
/// tolerance, Out when it is entirely above, Unknown otherwise.
ThreeValued handle_ae_equal(const MeasurableHandle& s, const MeasurableHandle& t,
                            const Rational& tolerance, Index depth);

/// Heuristic limsup membership probe over an index window: In if q lies in
/// every approximant there, Out if in none. Diagnostic only; no verification
/// suite depends on it.
ThreeValued member_at_depth(const MeasurableHandle& s, const Rational& q, Index window_lo,
                            Index window_hi);

struct Report {
  std::string claim;
  Index depth = 0;
  std::vector<std::pair<std::string, Enclosure>> enclosures;
  enum class Verdict { PASS, FAIL, PARTIAL } verdict = Verdict::FAIL;
  Rational slack;
  std::string note;

  bool passed() const { return verdict == Verdict::PASS; }
};

/// F is well-defined: if x ~ y then F(x) and F(y) are a.e. equal, up to the
/// telescoped slack 2^(-depth+3). Non-equivalent inputs pass vacuously.
Report verify_well_defined(const CauchyPoint& x, const CauchyPoint& y, Index depth);

/// Isometry: the d-bar enclosure and the mu*(F symm_diff F) enclosure both
/// contain the common limit, so they must intersect.
Report verify_isometry(const CauchyPoint& x, const CauchyPoint& y, Index depth);

/// Definition-of-isomorphism clauses: F commutes with union, intersection and
/// complement up to a.e. equality, defect at most 2^(-depth+3).
Report verify_union_hom(const CauchyPoint& x, const CauchyPoint& y, Index depth);
Report verify_intersect_hom(const CauchyPoint& x, const CauchyPoint& y, Index depth);
Report verify_complement_hom(const CauchyPoint& x, Index depth);

/// F commutes with the countable union: F(E)'s stage approximants against the
/// stage-L finite unions of the member handles, defect at most
/// 1/L + 2^(-depth+2) per checked stage. Propagates partial certification.
Report verify_countable_union_hom(const std::function<CauchyPoint(Index)>& family,
                                  const TailCertificate& cert, Index depth,
                                  Index max_stage = 8);

}  // namespace carext
