#include "carext/generators.hpp"

#include "carext/families.hpp"

namespace carext {

namespace {

std::int64_t draw(Rng& rng, std::int64_t n) {
  return static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(n));
}

}  // namespace

IntervalSet random_interval_set(Rng& rng, int denom_log2) {
  int pieces = 1;
  while (pieces < 8 && (rng() & 1)) ++pieces;  // geometric
  const std::int64_t denom = std::int64_t{1} << denom_log2;
  std::vector<Interval> raw;
  raw.reserve(pieces);
  for (int i = 0; i < pieces; ++i) {
    const std::int64_t a = draw(rng, denom);
    const std::int64_t b = a + 1 + draw(rng, denom - a);
    raw.push_back({Rational(a, denom), Rational(b, denom)});
  }
  return IntervalSet::canonicalize(std::move(raw));
}

Element random_element(Rng& rng, const AlgebraConfig& cfg) {
  if (cfg.kind() == AlgebraConfig::Kind::IntervalUnit)
    return Element(cfg, random_interval_set(rng));
  const std::uint64_t all =
      cfg.atom_count() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << cfg.atom_count()) - 1;
  return Element(cfg, FiniteSubset{rng() & all});
}

Cover random_cover(Rng& rng, const Element& e, int pieces) {
  Cover c;
  for (int i = 0; i < pieces; ++i) c.pieces.push_back(random_element(rng, e.config()));
  if (!is_cover(e, c)) {
    Element u = c.pieces.front();
    for (std::size_t i = 1; i < c.pieces.size(); ++i) u = unite(u, c.pieces[i]);
    c.pieces.push_back(difference(e, u));
  }
  return c;
}

CauchyPoint random_point(Rng& rng) {
  switch (rng() % 3) {
    case 0: return fatcantor_point();
    case 1: return increasing_point();
    default: return perturb_point(rng());
  }
}

CauchyPoint random_fast_reindex(const CauchyPoint& x, std::uint64_t seed) {
  auto fast = extract_fast(x);
  auto index = fast.index;
  auto base = x.approximant;
  // jitter on top of the canonical f keeps g(n) >= modulus(n) and strictly
  // increasing, so modulus k -> k still certifies the tail
  auto g = [index, seed](Index n) {
    std::mt19937_64 jitter(seed ^ static_cast<std::uint64_t>(n) * 0x9e3779b97f4a7c15ULL);
    return index(n) + static_cast<Index>(jitter() % 3);
  };
  return CauchyPoint{x.config, [base, g](Index n) { return base(g(n)); },
                     [](Index k) { return k; },
                     x.label + "#reidx" + std::to_string(seed)};
}

ExprPtr random_expr(Rng& rng, int max_depth) {
  auto e = std::make_shared<Expr>();
  if (max_depth <= 0 || rng() % 3 == 0) {
    switch (rng() % 4) {
      case 0:
      case 1: {
        const std::int64_t denom = 64;
        const std::int64_t a = draw(rng, denom);
        const std::int64_t b = a + 1 + draw(rng, denom - a);
        e->kind = Expr::Kind::Interval;
        e->lo = Rational(a, denom);
        e->hi = Rational(b, denom);
        break;
      }
      case 2: {
        e->kind = Expr::Kind::AtomSet;
        for (int i = 0; i < 8; ++i)
          if (rng() & 1) e->atoms.push_back(i);
        break;
      }
      default: {
        e->kind = Expr::Kind::Family;
        e->name = "perturb";
        e->params = {Rational(static_cast<std::int64_t>(rng() % 1000))};
        break;
      }
    }
    return e;
  }
  switch (rng() % 4) {
    case 0: e->kind = Expr::Kind::Union; break;
    case 1: e->kind = Expr::Kind::Intersect; break;
    case 2: e->kind = Expr::Kind::Diff; break;
    default: e->kind = Expr::Kind::Complement; break;
  }
  e->a = random_expr(rng, max_depth - 1);
  if (e->kind != Expr::Kind::Complement) e->b = random_expr(rng, max_depth - 1);
  return e;
}

}  // namespace carext
