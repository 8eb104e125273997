#pragma once

#include <random>

#include "carext/dsl.hpp"
#include "carext/outer_measure.hpp"

namespace carext {

using Rng = std::mt19937_64;

/// Random canonical interval set: geometric piece count, dyadic breakpoints of
/// bounded denominator. Keeps arithmetic small while exercising
/// canonicalization.
IntervalSet random_interval_set(Rng& rng, int denom_log2 = 12);

Element random_element(Rng& rng, const AlgebraConfig& cfg);

/// Random finite cover of e: random pieces plus, if needed, the uncovered
/// remainder, so is_cover always holds.
Cover random_cover(Rng& rng, const Element& e, int pieces);

/// A point drawn from the builtin families {fatcantor, increasing,
/// perturb(seed)}.
CauchyPoint random_point(Rng& rng);

/// A distinct fast re-indexing of x: approximant'(n) = approximant(g(n)) with
/// g strictly increasing and g(n) >= modulus(n), so the identity modulus
/// k -> k stays valid. Different seeds give different representatives of the
/// same completion point.
CauchyPoint random_fast_reindex(const CauchyPoint& x, std::uint64_t seed);

/// Random DSL tree over interval literals, atom sets, names and operators.
ExprPtr random_expr(Rng& rng, int max_depth = 4);

}  // namespace carext
