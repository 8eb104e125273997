#pragma once

#include <vector>

#include "carext/algebra.hpp"

namespace carext {

/// Finite algebra cover of a set: the A_i with e contained in their union.
/// Countable covers are approximated through the completion machinery, not
/// here; on algebra elements the infimum is attained by the singleton cover,
/// so outer_measure_element simply returns mu.
struct Cover {
  std::vector<Element> pieces;  // non-empty, all in one config
};

inline bool is_cover(const Element& e, const Cover& c) {
  if (c.pieces.empty()) throw std::invalid_argument("cover must be non-empty");
  Element u = c.pieces.front();
  if (!(u.config() == e.config())) throw ConfigMismatch();
  for (std::size_t i = 1; i < c.pieces.size(); ++i) u = unite(u, c.pieces[i]);
  return subset_of(e, u);
}

/// Sum of piece measures; counts overlaps multiply.
inline Rational cover_cost(const Cover& c) {
  Rational sum(0);
  for (const auto& p : c.pieces) sum += measure(p);
  return sum;
}

/// mu* restricted to the algebra, where it coincides with mu. The lower-bound
/// property cover_cost(c) >= measure(e) for every cover c is checked by the
/// restriction verification suite rather than assumed.
inline Rational outer_measure_element(const Element& e) {
  return measure(e);
}

}  // namespace carext
