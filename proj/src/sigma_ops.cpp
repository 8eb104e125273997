#include "carext/sigma_ops.hpp"

#include <map>
#include <mutex>
#include <optional>

namespace carext {

namespace {

void require_same(const CauchyPoint& x, const CauchyPoint& y) {
  if (!(x.config == y.config)) throw ConfigMismatch();
}

CauchyPoint binary_pt(const CauchyPoint& x, const CauchyPoint& y,
                      Element (*op)(const Element&, const Element&), const char* tag) {
  require_same(x, y);
  FastPoint fx = extract_fast(x), fy = extract_fast(y);
  return CauchyPoint{
      x.config,
      [fx, fy, op](Index n) { return op(fx.approximant(n), fy.approximant(n)); },
      [](Index k) { return k + 1; },
      "(" + x.label + tag + y.label + ")"};
}

}  // namespace

CauchyPoint union_pt(const CauchyPoint& x, const CauchyPoint& y) {
  return binary_pt(x, y, &unite, "|");
}

CauchyPoint intersect_pt(const CauchyPoint& x, const CauchyPoint& y) {
  return binary_pt(x, y, &intersect, "&");
}

CauchyPoint complement_pt(const CauchyPoint& x) {
  FastPoint fx = extract_fast(x);
  return CauchyPoint{x.config, [fx](Index n) { return complement(fx.approximant(n)); },
                     [](Index k) { return k; }, "!" + x.label};
}

CauchyPoint finite_union_pt(const std::vector<CauchyPoint>& members) {
  if (members.empty()) throw std::invalid_argument("finite_union_pt: empty family");
  std::vector<FastPoint> fasts;
  fasts.reserve(members.size());
  for (const auto& m : members) {
    require_same(members.front(), m);
    fasts.push_back(extract_fast(m));
  }
  Index shift = 0;
  while ((Index{1} << shift) < std::ssize(members)) ++shift;
  return CauchyPoint{members.front().config,
                     [fasts, shift](Index n) {
                       Element u = fasts.front().approximant(n + shift);
                       for (std::size_t i = 1; i < fasts.size(); ++i)
                         u = unite(u, fasts[i].approximant(n + shift));
                       return u;
                     },
                     [](Index k) { return k; },
                     "finite-union"};
}

Enclosure disjoint_within(const CauchyPoint& x, const CauchyPoint& y, Index depth) {
  require_same(x, y);
  return measure_completion(intersect_pt(x, y), depth);
}

Enclosure additivity_defect(const CauchyPoint& x, const CauchyPoint& y, Index depth) {
  require_same(x, y);
  const Enclosure u = measure_completion(union_pt(x, y), depth);
  const Enclosure a = measure_completion(x, depth);
  const Enclosure b = measure_completion(y, depth);
  const Rational lo = u.lo - a.hi - b.hi;
  const Rational hi = u.hi - a.lo - b.lo;
  if (lo >= Rational(0)) return Enclosure{lo, hi};
  if (hi <= Rational(0)) return Enclosure{-hi, -lo};
  return Enclosure{Rational(0), max(-lo, hi)};
}

struct CountableUnionResult::State {
  std::mutex mu;
  std::function<CauchyPoint(Index)> family;
  TailCertificate cert;
  AlgebraConfig cfg;
  Rational total;
  std::vector<FastPoint> fasts;
  std::map<Index, Element> stages;
  std::map<Index, Index> chosen_n;
  bool partial = false;
  bool any_certified = false;
  Rational best_bound;  // smallest certified 1/L

  State(std::function<CauchyPoint(Index)> fam, TailCertificate c, AlgebraConfig k)
      : family(std::move(fam)), cert(std::move(c)), cfg(std::move(k)),
        total(cfg.total_mass()), best_bound(total) {}

  const FastPoint& fast(Index i) {
    while (std::ssize(fasts) <= i) {
      CauchyPoint m = family(std::ssize(fasts));
      if (!(m.config == cfg)) throw ConfigMismatch();
      fasts.push_back(extract_fast(m));
    }
    return fasts[i];
  }

  // Total-mass tail certificate: whatever the countable union adds beyond the
  // partial union U_N is disjoint from U_N, so its measure is at most
  // total - mu-bar(U_N). Searched incrementally up to `cap`.
  std::optional<Index> search_tail(Index cap, const Rational& target) {
    Index probe = 1;
    while (Rational(cap) * Rational::pow2(-probe) > target / Rational(8)) ++probe;
    Element u = Element::empty(cfg);
    for (Index n = 1; n <= cap; ++n) {
      u = unite(u, fast(n - 1).approximant(probe));
      const Rational certified = total - measure(u) + Rational(n) * Rational::pow2(-probe);
      if (certified < target) return n;
    }
    return std::nullopt;
  }

  std::optional<Index> pick_members(Index stage, const Rational& target) {
    return std::visit(
        [&](const auto& c) -> std::optional<Index> {
          using T = std::decay_t<decltype(c)>;
          if constexpr (std::is_same_v<T, TailCertificate::SummableBound>) {
            Index hi = 1;
            while (c.bound(hi) >= target) {
              if (hi > (Index{1} << 30)) return std::nullopt;
              hi <<= 1;
            }
            Index lo = hi > 1 ? hi / 2 + 1 : 1;
            while (lo < hi) {
              Index mid = lo + (hi - lo) / 2;
              if (c.bound(mid) < target) hi = mid; else lo = mid + 1;
            }
            return hi;
          } else if constexpr (std::is_same_v<T, TailCertificate::Increasing>) {
            return search_tail(64 * stage + 1024, target);
          } else {
            return search_tail(c.cap, target);
          }
        },
        cert.variant());
  }

  Element stage_element(Index stage_l) {
    std::scoped_lock lock(mu);
    if (auto it = stages.find(stage_l); it != stages.end()) return it->second;
    const Rational target(1, 2 * stage_l);  // half of the 1/L budget each way
    std::optional<Index> n = pick_members(stage_l, target);
    bool certified = n.has_value();
    if (!n) {
      // cap exhausted: best-effort element, honestly flagged
      partial = true;
      n = std::visit(
          [&](const auto& c) -> Index {
            using T = std::decay_t<decltype(c)>;
            if constexpr (std::is_same_v<T, TailCertificate::SearchCap>) return c.cap;
            else return 64 * stage_l + 1024;
          },
          cert.variant());
    }
    Index k = 1;
    while (Rational(*n) * Rational::pow2(-k) >= target) ++k;
    Element y = Element::empty(cfg);
    for (Index i = 0; i < *n; ++i) y = unite(y, fast(i).approximant(k));
    stages.emplace(stage_l, y);
    chosen_n.emplace(stage_l, *n);
    if (certified) {
      any_certified = true;
      best_bound = min(best_bound, Rational(1, stage_l));
    }
    return y;
  }
};

CountableUnionResult::CountableUnionResult(CauchyPoint point, std::shared_ptr<State> state)
    : point_(std::move(point)), state_(std::move(state)) {}
CountableUnionResult::CountableUnionResult(const CountableUnionResult&) = default;
CountableUnionResult& CountableUnionResult::operator=(const CountableUnionResult&) = default;
CountableUnionResult::~CountableUnionResult() = default;

bool CountableUnionResult::fully_certified() const {
  std::scoped_lock lock(state_->mu);
  return !state_->partial;
}

Rational CountableUnionResult::achieved_precision() const {
  std::scoped_lock lock(state_->mu);
  return state_->any_certified ? state_->best_bound : state_->total;
}

Index CountableUnionResult::members_used(Index stage) const {
  std::scoped_lock lock(state_->mu);
  auto it = state_->chosen_n.find(stage);
  return it == state_->chosen_n.end() ? 0 : it->second;
}

CountableUnionResult countable_union(std::function<CauchyPoint(Index)> family,
                                     const TailCertificate& cert) {
  AlgebraConfig cfg = family(0).config;
  auto state = std::make_shared<CountableUnionResult::State>(std::move(family), cert, cfg);
  CauchyPoint point{
      std::move(cfg),
      [state](Index n) { return state->stage_element(n + 1); },
      // stage L certifies d-bar to the true union < 1/L; 1/L <= 2^(-k-1)
      // needs L = 2^(k+1), i.e. approximant index 2^(k+1) - 1
      [](Index k) { return (Index{1} << (k + 1)) - 1; },
      "countable-union"};
  return CountableUnionResult(std::move(point), std::move(state));
}

}  // namespace carext
