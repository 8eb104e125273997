#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>

#include "carext/serialize.hpp"
#include "carext/verify.hpp"

namespace {

using namespace carext;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitPartial = 3;

struct RunConfig {
  std::string algebra = "interval";
  Index depth = 16;
  std::string tolerance = "1/1024";
  std::uint64_t seed = 42;
  Index trials = 0;  // 0 = suite default
  bool text = false;
  bool force_depth = false;
};

AlgebraConfig parse_algebra(const std::string& spec) {
  if (spec == "interval") return AlgebraConfig::interval_unit();
  if (spec.starts_with("finite:")) {
    std::vector<Rational> weights;
    std::string rest = spec.substr(7);
    std::size_t pos = 0;
    while (pos <= rest.size()) {
      std::size_t comma = rest.find(',', pos);
      if (comma == std::string::npos) comma = rest.size();
      weights.push_back(Rational::parse(rest.substr(pos, comma - pos)));
      pos = comma + 1;
    }
    return AlgebraConfig::finite_weighted(std::move(weights));
  }
  throw std::invalid_argument("algebra must be 'interval' or 'finite:w1,w2,...'");
}

void check_depth(const RunConfig& rc) {
  // exact rationals grow with depth; the guard is overridable
  if (rc.depth < 1 || (rc.depth > 30 && !rc.force_depth))
    throw std::invalid_argument("depth must be in [1,30] (use --force-depth to override)");
}

std::string element_text(const Element& e) {
  if (!e.is_interval()) {
    std::string out = "{";
    std::uint64_t bits = e.atoms().bits;
    bool first = true;
    for (int i = 0; bits != 0; ++i, bits >>= 1)
      if (bits & 1) {
        out += (first ? "a" : ",a") + std::to_string(i);
        first = false;
      }
    return out + "}";
  }
  if (e.intervals().empty()) return "(empty)";
  std::string out;
  for (const auto& p : e.intervals().parts()) {
    if (!out.empty()) out += " | ";
    out += "[" + p.lo.str() + "," + p.hi.str() + ")";
  }
  return out;
}

void emit(const RunConfig& rc, const nlohmann::ordered_json& json, const std::string& text) {
  if (rc.text) std::cout << text << "\n";
  else std::cout << json.dump() << "\n";
}

int cmd_eval(const RunConfig& rc, const std::string& expr) {
  const Element e = eval_element(*parse(expr), parse_algebra(rc.algebra));
  emit(rc, to_json(e), element_text(e));
  return kExitPass;
}

int cmd_dist(const RunConfig& rc, const std::string& lhs, const std::string& rhs) {
  const AlgebraConfig cfg = parse_algebra(rc.algebra);
  const Rational d = distance(eval_element(*parse(lhs), cfg), eval_element(*parse(rhs), cfg));
  emit(rc, nlohmann::ordered_json(d.str()), d.str());
  return kExitPass;
}

int cmd_measure(const RunConfig& rc, const std::string& spec) {
  check_depth(rc);
  const AlgebraConfig cfg = parse_algebra(rc.algebra);
  const ExprPtr expr = parse(spec);
  Enclosure enc;
  try {
    const Rational m = measure(eval_element(*expr, cfg));  // exact for elements
    enc = Enclosure{m, m};
  } catch (const std::invalid_argument&) {
    enc = measure_completion(eval_point(*expr, cfg), rc.depth);
  }
  emit(rc, to_json(enc), "lo=" + enc.lo.str() + " hi=" + enc.hi.str());
  return kExitPass;
}

int cmd_verify(const RunConfig& rc, const std::string& suite, Index covers, int atoms) {
  check_depth(rc);
  const Index trials = rc.trials;
  Report report;
  if (suite == "metric") {
    report = run_metric_suite(trials ? trials : 10000, rc.seed);
  } else if (suite == "restriction") {
    report = run_restriction_suite(trials ? trials : 1000, covers, rc.seed);
  } else if (suite == "isometry") {
    report = run_isometry_suite(trials ? trials : 100, rc.depth, rc.seed);
  } else if (suite == "sigma-hom") {
    report = run_sigma_hom_suite(trials ? trials : 100, rc.depth, rc.seed);
  } else if (suite == "countable-union") {
    report = run_countable_union_suite(trials ? trials : 64, rc.depth);
  } else if (suite == "oracle") {
    report = run_oracle_suite(atoms, trials ? trials : 50, rc.seed);
  } else {
    throw std::invalid_argument("unknown suite '" + suite + "'");
  }
  emit(rc, to_json(report),
       report.claim + ": " + verdict_name(report.verdict) + " (" + report.note + ")");
  switch (report.verdict) {
    case Report::Verdict::PASS: return kExitPass;
    case Report::Verdict::PARTIAL: return kExitPartial;
    default: return kExitFail;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact measure-algebra completion toolkit"};
  app.require_subcommand(1);

  RunConfig rc;
  std::string expr, rhs, suite;
  Index covers = 100;
  int atoms = 8;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--algebra", rc.algebra, "interval | finite:<w1,w2,...>");
    cmd->add_option("--depth", rc.depth, "enclosure depth (default 16)");
    cmd->add_option("--tolerance", rc.tolerance, "tolerance as p/q (default 1/1024)");
    cmd->add_option("--seed", rc.seed, "generator seed");
    cmd->add_option("--trials", rc.trials, "trial count (suite default if omitted)");
    cmd->add_flag("--force-depth", rc.force_depth, "lift the depth<=30 guard");
    cmd->add_flag("--text", rc.text, "human-readable output instead of JSON");
  };

  CLI::App* eval = app.add_subcommand("eval", "evaluate an element expression");
  eval->add_option("expr", expr)->required();
  add_common(eval);

  CLI::App* dist = app.add_subcommand("dist", "exact distance between two elements");
  dist->add_option("lhs", expr)->required();
  dist->add_option("rhs", rhs)->required();
  add_common(dist);

  CLI::App* meas = app.add_subcommand("measure", "measure enclosure of a point or element");
  meas->add_option("spec", expr)->required();
  add_common(meas);

  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", suite, "metric|restriction|isometry|sigma-hom|countable-union|oracle")
      ->required();
  verify->add_option("--covers", covers, "covers per element (restriction)");
  verify->add_option("--atoms", atoms, "atom count (oracle)");
  add_common(verify);

  try {
    app.parse(argc, argv);
    if (eval->parsed()) return cmd_eval(rc, expr);
    if (dist->parsed()) return cmd_dist(rc, expr, rhs);
    if (meas->parsed()) return cmd_measure(rc, expr);
    return cmd_verify(rc, suite, covers, atoms);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
