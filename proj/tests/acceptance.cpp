// Acceptance gate: one line per criterion, nonzero exit on any failure.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "carext/families.hpp"
#include "carext/verify.hpp"

using namespace carext;

namespace {

int failures = 0;

void criterion(const char* name, const std::function<Report()>& run) {
  const auto t0 = std::chrono::steady_clock::now();
  Report r;
  std::string error;
  try {
    r = run();
  } catch (const std::exception& e) {
    error = e.what();
  }
  const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
  const bool ok = error.empty() && r.passed();
  if (!ok) ++failures;
  std::printf("[%s] %-28s (%5lld ms)  %s\n", ok ? "PASS" : "FAIL", name,
              static_cast<long long>(ms),
              error.empty() ? r.note.c_str() : error.c_str());
}

Report fatcantor_measure_criterion() {
  Report r;
  r.claim = "mu-bar(fatcantor) encloses 1/2 at depth 20";
  r.depth = 20;
  const Enclosure m = measure_completion(fatcantor_point(), 20);
  r.enclosures.emplace_back("measure", m);
  const bool ok = m.contains(Rational(1, 2)) && m.width() <= Rational::pow2(-18);
  r.verdict = ok ? Report::Verdict::PASS : Report::Verdict::FAIL;
  r.note = "enclosure [" + m.lo.str() + ", " + m.hi.str() + "]";
  return r;
}

}  // namespace

int main() {
  criterion("metric-axioms", [] { return run_metric_suite(10000, 42); });
  criterion("outer-measure-restriction", [] { return run_restriction_suite(1000, 100, 43); });
  criterion("finite-algebra-oracle", [] { return run_oracle_suite(8, 50, 7); });
  criterion("fatcantor-measure", fatcantor_measure_criterion);
  criterion("isometry", [] { return run_isometry_suite(100, 16, 44); });
  criterion("sigma-homomorphism", [] { return run_sigma_hom_suite(100, 16, 44); });
  criterion("countable-union", [] { return run_countable_union_suite(64, 16); });
  criterion("well-definedness", [] { return run_well_defined_suite(50, 16, 45); });
  criterion("dsl-round-trip", [] { return run_dsl_suite(500, 46); });
  return failures == 0 ? 0 : 1;
}
