#include "carext/algebra.hpp"

#include <bit>

namespace carext {

AlgebraConfig AlgebraConfig::finite_weighted(std::vector<Rational> weights) {
  if (weights.empty() || weights.size() > 64)
    throw std::invalid_argument("finite algebra needs between 1 and 64 atoms");
  auto impl = std::make_shared<Impl>();
  impl->total = Rational(0);
  for (const auto& w : weights) {
    if (!(w > Rational(0))) throw std::invalid_argument("atom weights must be positive");
    impl->total += w;
  }
  impl->weights = std::move(weights);
  return AlgebraConfig(std::move(impl));
}

Element::Element(AlgebraConfig cfg, IntervalSet set) : cfg_(std::move(cfg)), value_(std::move(set)) {
  if (cfg_.kind() != AlgebraConfig::Kind::IntervalUnit)
    throw std::invalid_argument("interval set in a finite algebra");
}

Element::Element(AlgebraConfig cfg, FiniteSubset atoms) : cfg_(std::move(cfg)), value_(atoms) {
  if (cfg_.kind() != AlgebraConfig::Kind::FiniteWeighted)
    throw std::invalid_argument("atom subset in the interval algebra");
  if (cfg_.atom_count() < 64 && (atoms.bits >> cfg_.atom_count()) != 0)
    throw std::invalid_argument("atom index out of range for config");
}

Element Element::empty(const AlgebraConfig& cfg) {
  if (cfg.kind() == AlgebraConfig::Kind::IntervalUnit) return Element(cfg, IntervalSet());
  return Element(cfg, FiniteSubset{0});
}

Element Element::universe(const AlgebraConfig& cfg) {
  if (cfg.kind() == AlgebraConfig::Kind::IntervalUnit) return Element(cfg, IntervalSet::unit());
  std::uint64_t all = cfg.atom_count() == 64 ? ~std::uint64_t{0}
                                             : (std::uint64_t{1} << cfg.atom_count()) - 1;
  return Element(cfg, FiniteSubset{all});
}

bool Element::is_empty() const {
  return is_interval() ? intervals().empty() : atoms().bits == 0;
}

namespace {

void require_same(const Element& a, const Element& b) {
  if (!(a.config() == b.config())) throw ConfigMismatch();
}

template <class IvOp, class BitOp>
Element zip(const Element& a, const Element& b, IvOp iv, BitOp bits) {
  require_same(a, b);
  if (a.is_interval()) return Element(a.config(), iv(a.intervals(), b.intervals()));
  return Element(a.config(), FiniteSubset{bits(a.atoms().bits, b.atoms().bits)});
}

}  // namespace

Element unite(const Element& a, const Element& b) {
  return zip(a, b, [](const auto& x, const auto& y) { return unite(x, y); },
             [](std::uint64_t x, std::uint64_t y) { return x | y; });
}

Element intersect(const Element& a, const Element& b) {
  return zip(a, b, [](const auto& x, const auto& y) { return intersect(x, y); },
             [](std::uint64_t x, std::uint64_t y) { return x & y; });
}

Element symm_diff(const Element& a, const Element& b) {
  return zip(a, b, [](const auto& x, const auto& y) { return symm_diff(x, y); },
             [](std::uint64_t x, std::uint64_t y) { return x ^ y; });
}

Element difference(const Element& a, const Element& b) {
  return zip(a, b, [](const auto& x, const auto& y) { return difference(x, y); },
             [](std::uint64_t x, std::uint64_t y) { return x & ~y; });
}

Element complement(const Element& a) {
  if (a.is_interval()) return Element(a.config(), complement(a.intervals()));
  return symm_diff(a, Element::universe(a.config()));
}

Rational measure(const Element& a) {
  if (a.is_interval()) return a.intervals().measure();
  Rational sum(0);
  std::uint64_t bits = a.atoms().bits;
  for (std::size_t i = 0; bits != 0; ++i, bits >>= 1)
    if (bits & 1) sum += a.config().weights()[i];
  return sum;
}

Rational distance(const Element& a, const Element& b) {
  return measure(symm_diff(a, b));
}

bool subset_of(const Element& a, const Element& b) {
  return difference(a, b).is_empty();
}

}  // namespace carext
