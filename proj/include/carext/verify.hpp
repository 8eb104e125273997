#pragma once

#include "carext/generators.hpp"
#include "carext/limit_map.hpp"

namespace carext {

/// Seeded property suites behind `verify`; each returns an aggregate Report
/// whose note carries trial counts and worst observed values.

/// Pseudometric axioms on random canonical interval sets, exact.
Report run_metric_suite(Index trials, std::uint64_t seed);

/// mu*|_Omega = mu at desk scale: cover costs dominate measures, the
/// singleton cover attains equality, monotonicity under subsets. Exact.
Report run_restriction_suite(Index elements, Index covers_each, std::uint64_t seed);

/// Isometry over seeded pairs from the builtin families; both enclosures must
/// intersect with widths at most 2^(-depth+2).
Report run_isometry_suite(Index trials, Index depth, std::uint64_t seed);

/// Union/intersection/complement homomorphism clauses plus the De Morgan
/// route, defects at most 2^(-depth+3).
Report run_sigma_hom_suite(Index trials, Index depth, std::uint64_t seed);

/// Lemma-style countable union checks: vanishing remainder up to max_stage on
/// the increasing family, mu-bar enclosures of the increasing and
/// dyadic-blocks unions, and the countable-union homomorphism at hom_depth.
Report run_countable_union_suite(Index max_stage, Index hom_depth);

/// Brute-force finite-algebra battery: constant completion points reproduce
/// the algebra exactly, F is the identity up to ~, all isomorphism clauses
/// have exact zero defect over every pair, plus seeded eventually-constant
/// countable unions.
Report run_oracle_suite(int atom_count, Index countable_trials, std::uint64_t seed);

/// Well-definedness of F over pairs of distinct fast re-indexings of one
/// family.
Report run_well_defined_suite(Index pairs, Index depth, std::uint64_t seed);

/// DSL round-trips, builtin modulus audits at depth 12, fat-Cantor stage
/// measures against the closed form.
Report run_dsl_suite(Index expressions, std::uint64_t seed);

}  // namespace carext
