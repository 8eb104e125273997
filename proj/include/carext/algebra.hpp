#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "carext/interval_set.hpp"
#include "carext/rational.hpp"

namespace carext {

/// Atom subset of a finite weighted powerset algebra, as a bitmask over the
/// config's n named atoms (a0..a{n-1}, n <= 64).
struct FiniteSubset {
  std::uint64_t bits = 0;

  friend bool operator==(const FiniteSubset&, const FiniteSubset&) = default;
};

/// Thrown when Elements from different algebra configs are combined.
struct ConfigMismatch : std::invalid_argument {
  ConfigMismatch() : std::invalid_argument("elements belong to different algebra configs") {}
};

/// The base measure space: either Lebesgue length on the unit interval
/// algebra, or a weighted powerset on finitely many atoms (the brute-force
/// oracle algebra). Weights are strictly positive so d is a metric there.
class AlgebraConfig {
public:
  enum class Kind { IntervalUnit, FiniteWeighted };

  static AlgebraConfig interval_unit() { return AlgebraConfig(std::make_shared<Impl>()); }
  static AlgebraConfig finite_weighted(std::vector<Rational> weights);

  Kind kind() const { return impl_->weights.empty() ? Kind::IntervalUnit : Kind::FiniteWeighted; }
  const std::vector<Rational>& weights() const { return impl_->weights; }
  std::size_t atom_count() const { return impl_->weights.size(); }

  /// mu(X): 1 for the unit interval, the weight sum otherwise. Finite.
  const Rational& total_mass() const { return impl_->total; }

  friend bool operator==(const AlgebraConfig& a, const AlgebraConfig& b) {
    return a.impl_ == b.impl_ || (a.kind() == b.kind() && a.weights() == b.weights());
  }

private:
  struct Impl {
    std::vector<Rational> weights;  // empty <=> IntervalUnit
    Rational total = Rational(1);
  };
  explicit AlgebraConfig(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

/// A member of the algebra: a canonical IntervalSet or a FiniteSubset,
/// tagged with its config. Immutable after construction.
class Element {
public:
  Element(AlgebraConfig cfg, IntervalSet set);
  Element(AlgebraConfig cfg, FiniteSubset atoms);

  static Element empty(const AlgebraConfig& cfg);
  static Element universe(const AlgebraConfig& cfg);

  const AlgebraConfig& config() const { return cfg_; }
  bool is_interval() const { return std::holds_alternative<IntervalSet>(value_); }
  const IntervalSet& intervals() const { return std::get<IntervalSet>(value_); }
  const FiniteSubset& atoms() const { return std::get<FiniteSubset>(value_); }

  bool is_empty() const;

  friend bool operator==(const Element& a, const Element& b) {
    return a.cfg_ == b.cfg_ && a.value_ == b.value_;
  }

private:
  AlgebraConfig cfg_;
  std::variant<IntervalSet, FiniteSubset> value_;
};

Element unite(const Element& a, const Element& b);
Element intersect(const Element& a, const Element& b);
Element complement(const Element& a);
Element difference(const Element& a, const Element& b);
Element symm_diff(const Element& a, const Element& b);

/// mu: interval length resp. atom weight sum. Exact.
Rational measure(const Element& a);

/// The pseudometric d(a,b) = mu(a symm_diff b). On canonical forms it is a
/// genuine metric: d(a,b) == 0 iff a == b.
Rational distance(const Element& a, const Element& b);

/// a subset of b, decided exactly.
bool subset_of(const Element& a, const Element& b);

}  // namespace carext
