#pragma once

#include <cstdint>

#include "carext/completion.hpp"

namespace carext {

/// Smith-Volterra-Cantor construction: stage n removes, from each of the
/// 2^(n-1) surviving blocks, the centered interval of length 4^(-n) (as a
/// half-open piece; the measure is the same). Stage measures are exactly
/// 1/2 + 2^(-n-1). Stages are cached process-wide.
IntervalSet fatcantor_stage(Index n);

/// The SVC stages as a Cauchy point; stage distances are exact
/// 2^(-n-1) - 2^(-m-1), so modulus(k) = k.
CauchyPoint fatcantor_point();

/// approximant(i) = [0, 1 - 1/(i+2)); modulus(k) = 2^k.
CauchyPoint increasing_point();

/// Constant point of the dyadic block [1 - 2^-i, 1 - 2^-(i+1)).
CauchyPoint dyadicblocks_point(Index i);

/// Pseudo-random interval-set walk: step t toggles one dyadic interval of
/// length 2^(-t-2), so tails decay geometrically and modulus(k) = k.
/// Deterministic in (seed, index).
CauchyPoint perturb_point(std::uint64_t seed);

}  // namespace carext
