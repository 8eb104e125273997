#include "carext/limit_map.hpp"

#include <algorithm>

namespace carext {

namespace {

Rational default_handle_bound(Index n) { return Rational::pow2(-n + 1); }

MeasurableHandle combine(const MeasurableHandle& s, const MeasurableHandle& t,
                         Element (*op)(const Element&, const Element&)) {
  if (!(s.fast.point.config == t.fast.point.config)) throw ConfigMismatch();
  auto sa = s.fast.point.approximant;
  auto ta = t.fast.point.approximant;
  CauchyPoint stream{s.fast.point.config,
                     [sa, ta, op](Index n) { return op(sa(n), ta(n)); },
                     [](Index k) { return k; }, "handle-op"};
  auto sb = s.bound, tb = t.bound;
  return MeasurableHandle{FastPoint{std::move(stream), [](Index n) { return n; }},
                          [sb, tb](Index n) { return sb(n) + tb(n); }};
}

Report make_report(std::string claim, Index depth, Rational slack) {
  Report r;
  r.claim = std::move(claim);
  r.depth = depth;
  r.slack = std::move(slack);
  return r;
}

}  // namespace

MeasurableHandle apply_F(const CauchyPoint& x) {
  return MeasurableHandle{extract_fast(x), &default_handle_bound};
}

MeasurableHandle handle_union(const MeasurableHandle& s, const MeasurableHandle& t) {
  return combine(s, t, &unite);
}

MeasurableHandle handle_intersect(const MeasurableHandle& s, const MeasurableHandle& t) {
  return combine(s, t, &intersect);
}

MeasurableHandle handle_complement(const MeasurableHandle& s) {
  auto sa = s.fast.point.approximant;
  CauchyPoint stream{s.fast.point.config, [sa](Index n) { return complement(sa(n)); },
                     [](Index k) { return k; }, "handle-op"};
  return MeasurableHandle{FastPoint{std::move(stream), [](Index n) { return n; }}, s.bound};
}

Enclosure handle_distance(const MeasurableHandle& s, const MeasurableHandle& t, Index depth) {
  if (!(s.fast.point.config == t.fast.point.config)) throw ConfigMismatch();
  if (depth < 1) throw std::invalid_argument("depth must be >= 1");
  const Rational center = distance(s.approximant(depth), t.approximant(depth));
  const Rational radius = s.bound(depth) + t.bound(depth);
  return Enclosure{max(Rational(0), center - radius), center + radius};
}

ThreeValued handle_ae_equal(const MeasurableHandle& s, const MeasurableHandle& t,
                            const Rational& tolerance, Index depth) {
  if (!(tolerance > Rational(0))) throw std::invalid_argument("tolerance must be positive");
  const Enclosure e = handle_distance(s, t, depth);
  if (e.hi <= tolerance) return ThreeValued::In;
  if (e.lo > tolerance) return ThreeValued::Out;
  return ThreeValued::Unknown;
}

ThreeValued member_at_depth(const MeasurableHandle& s, const Rational& q, Index window_lo,
                            Index window_hi) {
  if (q < Rational(0) || q >= Rational(1))
    throw std::invalid_argument("membership probe point must lie in [0,1)");
  if (window_hi < window_lo) throw std::invalid_argument("empty index window");
  Index hits = 0, total = 0;
  for (Index n = window_lo; n <= window_hi; ++n, ++total)
    if (s.approximant(n).intervals().contains(q)) ++hits;
  if (hits == total) return ThreeValued::In;
  if (hits == 0) return ThreeValued::Out;
  return ThreeValued::Unknown;
}

Report verify_well_defined(const CauchyPoint& x, const CauchyPoint& y, Index depth) {
  Report r = make_report("F well-defined", depth, Rational::pow2(-depth + 3));
  const Enclosure eq = equivalent_within(x, y, depth);
  const Enclosure hd = handle_distance(apply_F(x), apply_F(y), depth);
  r.enclosures = {{"x~y", eq}, {"d(F(x),F(y))", hd}};
  if (eq.lo > Rational(0)) {
    r.verdict = Report::Verdict::PASS;
    r.note = "inputs not equivalent at this depth; claim holds vacuously";
  } else {
    r.verdict = hd.hi <= eq.hi + r.slack ? Report::Verdict::PASS : Report::Verdict::FAIL;
  }
  return r;
}

Report verify_isometry(const CauchyPoint& x, const CauchyPoint& y, Index depth) {
  Report r = make_report("F isometry", depth, Rational::pow2(-depth + 2));
  const Enclosure db = dist_completion(x, y, depth);
  // one extra depth on the handle side keeps both widths at 2^(-depth+2)
  const Enclosure hd = handle_distance(apply_F(x), apply_F(y), depth + 1);
  r.enclosures = {{"dbar(x,y)", db}, {"mu*(F(x) sd F(y))", hd}};
  r.verdict = db.intersects(hd) ? Report::Verdict::PASS : Report::Verdict::FAIL;
  return r;
}

namespace {

Report hom_report(const char* claim, const MeasurableHandle& lhs, const MeasurableHandle& rhs,
                  Index depth) {
  Report r = make_report(claim, depth, Rational::pow2(-depth + 3));
  const Enclosure e = handle_distance(lhs, rhs, depth);
  r.enclosures = {{"defect", e}};
  r.verdict = e.contains(Rational(0)) && e.hi <= r.slack ? Report::Verdict::PASS
                                                         : Report::Verdict::FAIL;
  return r;
}

}  // namespace

Report verify_union_hom(const CauchyPoint& x, const CauchyPoint& y, Index depth) {
  return hom_report("F(x|y) = F(x)|F(y)", apply_F(union_pt(x, y)),
                    handle_union(apply_F(x), apply_F(y)), depth);
}

Report verify_intersect_hom(const CauchyPoint& x, const CauchyPoint& y, Index depth) {
  const MeasurableHandle fx = apply_F(x), fy = apply_F(y);
  const MeasurableHandle direct = handle_intersect(fx, fy);
  Report r = hom_report("F(x&y) = F(x)&F(y)", apply_F(intersect_pt(x, y)), direct, depth);
  // De Morgan route: F(.&.) = F(!(. ) | !(.))^C on handles
  const MeasurableHandle demorgan =
      handle_complement(handle_union(handle_complement(fx), handle_complement(fy)));
  const Enclosure dm = handle_distance(direct, demorgan, depth);
  r.enclosures.emplace_back("demorgan-vs-direct", dm);
  if (!dm.contains(Rational(0))) r.verdict = Report::Verdict::FAIL;
  return r;
}

Report verify_complement_hom(const CauchyPoint& x, Index depth) {
  return hom_report("F(!x) = !F(x)", apply_F(complement_pt(x)),
                    handle_complement(apply_F(x)), depth);
}

Report verify_countable_union_hom(const std::function<CauchyPoint(Index)>& family,
                                  const TailCertificate& cert, Index depth, Index max_stage) {
  Report r = make_report("F(countable union) = union of F", depth, Rational::pow2(-depth + 2));
  CountableUnionResult e = countable_union(family, cert);
  const MeasurableHandle fe = apply_F(e.point());
  bool ok = true;
  for (Index stage = 1; stage <= max_stage; stage *= 2) {
    e.point().approximant(stage - 1);  // force the stage so members_used is known
    const Index n = e.members_used(stage);
    std::vector<CauchyPoint> members;
    for (Index i = 0; i < n; ++i) members.push_back(family(i));
    const MeasurableHandle stage_union = apply_F(finite_union_pt(members));
    const Enclosure d = handle_distance(fe, stage_union, depth);
    r.enclosures.emplace_back("stage-" + std::to_string(stage), d);
    ok = ok && d.hi <= Rational(1, stage) + r.slack;
  }
  if (!e.fully_certified()) {
    r.verdict = Report::Verdict::PARTIAL;
    r.note = "certified only to " + e.achieved_precision().str();
  } else {
    r.verdict = ok ? Report::Verdict::PASS : Report::Verdict::FAIL;
  }
  return r;
}

}  // namespace carext
