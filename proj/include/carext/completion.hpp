#pragma once

#include <cstdint>
#include <functional>
#include <string>

#include "carext/algebra.hpp"

namespace carext {

using Index = std::int64_t;

/// Exact rational interval [lo, hi] certified to contain a limit value
/// (d-bar, mu-bar, mu*). Finite-precision certificate, never a float.
struct Enclosure {
  Rational lo;
  Rational hi;

  Rational width() const { return hi - lo; }
  bool contains(const Rational& v) const { return lo <= v && v <= hi; }
  bool intersects(const Enclosure& o) const { return lo <= o.hi && o.lo <= hi; }

  friend bool operator==(const Enclosure&, const Enclosure&) = default;
};

/// A point of the completion: a mu-Cauchy sequence of Elements together with
/// an explicit modulus of convergence. The modulus contract is
///   distance(approximant(i), approximant(j)) <= 2^-k  for all i,j >= modulus(k),
/// spot-checkable to any finite depth but never assumed decided. Approximants
/// must be pure: the same index always yields the identical Element.
struct CauchyPoint {
  AlgebraConfig config;
  std::function<Element(Index)> approximant;
  std::function<Index(Index)> modulus;  // nondecreasing
  std::string label;
};

/// A CauchyPoint re-indexed along a strictly increasing f so that
/// distance(approximant(n), approximant(m)) <= 2^-n for all m >= n.
struct FastPoint {
  CauchyPoint point;                  // modulus is k -> k by construction
  std::function<Index(Index)> index;  // f: position in the original sequence

  Element approximant(Index n) const { return point.approximant(n); }
};

CauchyPoint constant_point(const Element& a);
CauchyPoint zero_point(const AlgebraConfig& cfg);

/// Finite-depth audit of the modulus contract: for every k <= depth, sampled
/// index pairs inside [modulus(k), modulus(k)+depth] must be within 2^-k.
/// False is a verdict, not an error.
bool check_modulus(const CauchyPoint& x, Index depth);

/// The fast subsequence f(n) = max(modulus(n), f(n-1)+1); strictly increasing,
/// with tail bound 2^-n.
FastPoint extract_fast(const CauchyPoint& x);

/// Enclosure of d-bar(x, y): center = distance of the fast approximants at
/// `depth`, radius 2^(-depth+1). Width <= 2^(-depth+2).
Enclosure dist_completion(const CauchyPoint& x, const CauchyPoint& y, Index depth);

/// mu-bar(x) = d-bar(x, E_empty), as an enclosure.
Enclosure measure_completion(const CauchyPoint& x, Index depth);

/// Enclosure of lim d(x_n, y_n); callers decide x ~ y by testing lo == 0 and
/// hi against their tolerance. Exact equality is only semi-decidable.
Enclosure equivalent_within(const CauchyPoint& x, const CauchyPoint& y, Index depth);

/// The same point viewed from index shift onward: approximant(n) = x(n+shift).
/// Distinct shifts give distinct representatives of one equivalence class.
CauchyPoint tail_shift(const CauchyPoint& x, Index shift);

}  // namespace carext
