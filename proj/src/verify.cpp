#include "carext/verify.hpp"

#include "carext/families.hpp"
#include "carext/outer_measure.hpp"

namespace carext {

namespace {

Report suite_report(std::string claim, Index depth, Rational slack) {
  Report r;
  r.claim = std::move(claim);
  r.depth = depth;
  r.slack = std::move(slack);
  r.verdict = Report::Verdict::PASS;
  return r;
}

void tally(Report& r, bool ok, Index& violations) {
  if (!ok) {
    ++violations;
    r.verdict = Report::Verdict::FAIL;
  }
}

}  // namespace

Report run_metric_suite(Index trials, std::uint64_t seed) {
  Report r = suite_report("pseudometric axioms (exact)", 0, Rational(0));
  Rng rng(seed);
  const AlgebraConfig cfg = AlgebraConfig::interval_unit();
  Index violations = 0;
  for (Index t = 0; t < trials; ++t) {
    const Element a = random_element(rng, cfg);
    const Element b = random_element(rng, cfg);
    const Element c = random_element(rng, cfg);
    const Rational ab = distance(a, b), bc = distance(b, c), ac = distance(a, c);
    tally(r, distance(a, a).is_zero(), violations);
    tally(r, ab == distance(b, a), violations);
    tally(r, ac <= ab + bc, violations);
    tally(r, !ab.is_zero() || a == b, violations);  // metric on canonical forms
  }
  r.note = "trials=" + std::to_string(trials) + " violations=" + std::to_string(violations);
  return r;
}

Report run_restriction_suite(Index elements, Index covers_each, std::uint64_t seed) {
  Report r = suite_report("mu* restricted to the algebra equals mu (exact)", 0, Rational(0));
  Rng rng(seed);
  const AlgebraConfig cfg = AlgebraConfig::interval_unit();
  Index violations = 0;
  for (Index t = 0; t < elements; ++t) {
    const Element e = random_element(rng, cfg);
    const Rational m = measure(e);
    tally(r, outer_measure_element(e) == m, violations);
    tally(r, cover_cost(Cover{{e}}) == m, violations);  // singleton attainment
    const Element f = unite(e, random_element(rng, cfg));
    tally(r, m <= outer_measure_element(f), violations);  // monotone under subset
    for (Index k = 0; k < covers_each; ++k) {
      const Cover c = random_cover(rng, e, 1 + static_cast<int>(rng() % 4));
      tally(r, is_cover(e, c) && cover_cost(c) >= m, violations);
    }
  }
  r.note = "elements=" + std::to_string(elements) + " covers_each=" +
           std::to_string(covers_each) + " violations=" + std::to_string(violations);
  return r;
}

Report run_isometry_suite(Index trials, Index depth, std::uint64_t seed) {
  Report r = suite_report("isometry of F", depth, Rational::pow2(-depth + 2));
  Rng rng(seed);
  Index violations = 0;
  Rational worst_gap(0);
  for (Index t = 0; t < trials; ++t) {
    const CauchyPoint x = random_point(rng);
    const CauchyPoint y = random_point(rng);
    const Report one = verify_isometry(x, y, depth);
    const Enclosure& db = one.enclosures[0].second;
    const Enclosure& hd = one.enclosures[1].second;
    tally(r, one.passed(), violations);
    tally(r, db.width() <= r.slack && hd.width() <= r.slack, violations);
    if (!db.intersects(hd)) worst_gap = max(worst_gap, max(db.lo - hd.hi, hd.lo - db.hi));
  }
  r.note = "trials=" + std::to_string(trials) + " violations=" + std::to_string(violations) +
           " max_gap=" + worst_gap.str();
  return r;
}

Report run_sigma_hom_suite(Index trials, Index depth, std::uint64_t seed) {
  Report r = suite_report("sigma-algebra homomorphism clauses", depth,
                          Rational::pow2(-depth + 3));
  Rng rng(seed);
  Index violations = 0;
  for (Index t = 0; t < trials; ++t) {
    const CauchyPoint x = random_point(rng);
    const CauchyPoint y = random_point(rng);
    tally(r, verify_union_hom(x, y, depth).passed(), violations);
    tally(r, verify_intersect_hom(x, y, depth).passed(), violations);
    tally(r, verify_complement_hom(x, depth).passed(), violations);
  }
  r.note = "trials=" + std::to_string(trials) + " violations=" + std::to_string(violations);
  return r;
}

Report run_countable_union_suite(Index max_stage, Index hom_depth) {
  Report r = suite_report("countable union via the stage construction", hom_depth,
                          Rational::pow2(-hom_depth + 2));
  const AlgebraConfig cfg = AlgebraConfig::interval_unit();
  auto increasing_family = [cfg](Index i) {
    const Rational hi = Rational(1) - Rational(1, i + 2);
    return constant_point(Element(cfg, IntervalSet::canonicalize({{Rational(0), hi}})));
  };
  auto dyadic_family = [](Index i) { return dyadicblocks_point(i + 1); };
  const TailCertificate dyadic_cert =
      TailCertificate::summable([](Index n) { return Rational::pow2(-n - 1); });

  Index violations = 0;

  // vanishing remainder of the increasing construction, stage by stage
  CountableUnionResult e = countable_union(increasing_family, TailCertificate::increasing());
  for (Index stage = 1; stage <= max_stage; ++stage) {
    e.point().approximant(stage - 1);
    const Index n = e.members_used(stage);
    std::vector<CauchyPoint> members;
    for (Index i = 0; i < n; ++i) members.push_back(increasing_family(i));
    const CauchyPoint partial = finite_union_pt(members);
    const CauchyPoint remainder = intersect_pt(e.point(), complement_pt(partial));
    Index dd = 1;
    while (Rational(3) * Rational::pow2(-dd) > Rational(1, 2 * stage)) ++dd;
    const Enclosure rem = measure_completion(remainder, dd);
    tally(r, rem.hi <= Rational(1, stage), violations);
    // partial-union domination: the finite union is inside E up to null sets
    const Enclosure inter = measure_completion(intersect_pt(partial, e.point()), dd);
    const Enclosure part = measure_completion(partial, dd);
    tally(r, inter.intersects(part), violations);
  }
  const Enclosure inc_measure = measure_completion(e.point(), 8);
  tally(r, e.fully_certified() && inc_measure.contains(Rational(1)), violations);
  r.enclosures.emplace_back("mu(increasing union)", inc_measure);

  CountableUnionResult d = countable_union(dyadic_family, dyadic_cert);
  const Enclosure dy_measure = measure_completion(d.point(), 8);
  tally(r, d.fully_certified() && dy_measure.contains(Rational(1, 2)), violations);
  r.enclosures.emplace_back("mu(dyadic union)", dy_measure);

  // F commutes with the countable union
  const Report hom_dy = verify_countable_union_hom(dyadic_family, dyadic_cert, hom_depth, 4);
  tally(r, hom_dy.passed(), violations);
  const Report hom_inc =
      verify_countable_union_hom(increasing_family, TailCertificate::increasing(), hom_depth, 2);
  tally(r, hom_inc.passed(), violations);
  for (const auto& [name, enc] : hom_dy.enclosures) r.enclosures.emplace_back("dyadic " + name, enc);

  r.note = "stages=" + std::to_string(max_stage) + " violations=" + std::to_string(violations);
  return r;
}

Report run_oracle_suite(int atom_count, Index countable_trials, std::uint64_t seed) {
  Report r = suite_report("finite-algebra brute-force oracle (exact)", 4, Rational(0));
  std::vector<Rational> weights;
  for (int i = 0; i < atom_count; ++i) weights.emplace_back(Rational(1, (i % 4) + 2));
  const AlgebraConfig cfg = AlgebraConfig::finite_weighted(weights);
  const std::uint64_t count = std::uint64_t{1} << atom_count;
  Index violations = 0;

  std::vector<Element> elems;
  std::vector<MeasurableHandle> handles;
  elems.reserve(count);
  for (std::uint64_t bits = 0; bits < count; ++bits) {
    elems.emplace_back(cfg, FiniteSubset{bits});
    handles.push_back(apply_F(constant_point(elems.back())));
    // F is the identity up to ~ on constant points
    tally(r, handles.back().approximant(4) == elems.back(), violations);
  }

  for (std::uint64_t i = 0; i < count; ++i) {
    const CauchyPoint x = constant_point(elems[i]);
    for (std::uint64_t j = 0; j < count; ++j) {
      const Element& a = elems[i];
      const Element& b = elems[j];
      // isometry with exact centers
      const Rational d_exact = distance(a, b);
      tally(r, dist_completion(x, constant_point(b), 4).contains(d_exact), violations);
      tally(r, distance(handles[i].approximant(4), handles[j].approximant(4)) == d_exact,
            violations);
      // all isomorphism clauses, exact zero defect
      tally(r, handle_union(handles[i], handles[j]).approximant(4) == unite(a, b), violations);
      tally(r, handle_intersect(handles[i], handles[j]).approximant(4) == intersect(a, b),
            violations);
    }
    tally(r, handle_complement(handles[i]).approximant(4) == complement(elems[i]), violations);
  }

  // eventually-constant countable unions collapse to exact finite unions
  Rng rng(seed);
  for (Index t = 0; t < countable_trials; ++t) {
    const Index m = 1 + static_cast<Index>(rng() % 6);
    std::vector<Element> prefix;
    Element expected = Element::empty(cfg);
    for (Index i = 0; i < m; ++i) {
      prefix.push_back(random_element(rng, cfg));
      expected = unite(expected, prefix.back());
    }
    auto family = [prefix, m](Index i) {
      return constant_point(prefix[static_cast<std::size_t>(std::min(i, m - 1))]);
    };
    const Rational total = cfg.total_mass();
    auto cert = TailCertificate::summable(
        [m, total](Index n) { return n >= m ? Rational(0) : total; });
    CountableUnionResult u = countable_union(family, cert);
    tally(r, u.point().approximant(3) == expected, violations);
    tally(r, u.fully_certified(), violations);
    tally(r, apply_F(u.point()).approximant(4) == expected, violations);
  }

  r.note = "atoms=" + std::to_string(atom_count) + " pairs=" + std::to_string(count * count) +
           " countable=" + std::to_string(countable_trials) +
           " violations=" + std::to_string(violations);
  return r;
}

Report run_well_defined_suite(Index pairs, Index depth, std::uint64_t seed) {
  Report r = suite_report("well-definedness of F", depth, Rational::pow2(-depth + 3));
  Rng rng(seed);
  Index violations = 0;
  Rational worst(0);
  for (Index t = 0; t < pairs; ++t) {
    const CauchyPoint base = random_point(rng);
    const CauchyPoint x = random_fast_reindex(base, rng());
    const CauchyPoint y = random_fast_reindex(base, rng());
    const Report one = verify_well_defined(x, y, depth);
    const Enclosure& hd = one.enclosures[1].second;
    tally(r, one.passed() && hd.hi <= r.slack, violations);
    worst = max(worst, hd.hi);
  }
  r.note = "pairs=" + std::to_string(pairs) + " violations=" + std::to_string(violations) +
           " worst_hi=" + worst.str();
  return r;
}

Report run_dsl_suite(Index expressions, std::uint64_t seed) {
  Report r = suite_report("DSL round-trips and builtin moduli", 12, Rational(0));
  Rng rng(seed);
  const AlgebraConfig cfg = AlgebraConfig::interval_unit();
  Index violations = 0;
  for (Index t = 0; t < expressions; ++t) {
    const ExprPtr e = random_expr(rng);
    const std::string text = print(*e);
    const ExprPtr back = parse(text);
    tally(r, back->identical(*e) && print(*back) == text, violations);
  }
  for (const char* name : {"fatcantor", "increasing"})
    tally(r, check_modulus(eval_family(name, {}), 12), violations);
  tally(r, check_modulus(eval_family("dyadicblocks", {Rational(2)}), 12), violations);
  tally(r, check_modulus(eval_family("perturb", {Rational(7)}), 12), violations);
  for (Index n = 1; n <= 20; ++n)
    tally(r, fatcantor_stage(n).measure() == Rational(1, 2) + Rational::pow2(-n - 1), violations);
  r.note = "expressions=" + std::to_string(expressions) +
           " violations=" + std::to_string(violations);
  return r;
}

}  // namespace carext
