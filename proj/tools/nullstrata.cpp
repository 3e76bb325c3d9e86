#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "nullstrata/errors.hpp"
#include "nullstrata/scenario.hpp"

namespace {

using namespace nullstrata;

struct Flags {
  std::string preset, config, algebra, subalgebra, torus, out;
  std::uint64_t seed = 0;
  int seeds = 1, trials = 25, degree_cap = 8;
  bool certify = false, no_springer = false, quiet = false;
};

struct Registered {
  CLI::App* app;
  Stage stage;
};

void add_shared(CLI::App* sub, Flags& f) {
  sub->add_option("--preset", f.preset, "pair preset name");
  sub->add_option("--config", f.config, "scenario config file ([pair] and [run] sections)");
  sub->add_option("--algebra", f.algebra, "builtin algebra such as sl(3), or a structure-constant file");
  sub->add_option("--subalgebra", f.subalgebra, "preset name, JSON coordinate vectors, or 'x; y; ...'");
  sub->add_option("--torus", f.torus, "basis of the split torus of k, same syntax as --subalgebra");
  sub->add_option("--seed", f.seed, "first seed");
  sub->add_option("--seeds", f.seeds, "number of consecutive seeds");
  sub->add_option("--trials", f.trials, "sample points per stratum and seed");
  sub->add_option("--degree-cap", f.degree_cap, "Groebner degree cap (1..64)");
  sub->add_flag("--certify", f.certify, "certify stratum dimensions with Groebner bases");
  sub->add_flag("--no-springer", f.no_springer, "skip the flag-variety bookkeeping");
  sub->add_option("--out", f.out, "directory for report.json and ideals/");
  sub->add_flag("--quiet", f.quiet, "do not print the table");
}

ScenarioConfig build_config(const CLI::App& sub, const Flags& f) {
  ScenarioConfig cfg;
  if (!f.config.empty()) {
    std::ifstream in(f.config);
    if (!in) throw Error(ErrorKind::ConfigError, "cannot open config '" + f.config + "'");
    cfg = parse_config(in, f.config);
  }
  auto given = [&](const char* name) { return sub.count(name) > 0; };
  if (given("--preset")) cfg.preset = f.preset;
  if (given("--algebra")) cfg.algebra = f.algebra;
  if (given("--subalgebra")) cfg.subalgebra = f.subalgebra;
  if (given("--torus")) cfg.torus = f.torus;
  if (given("--seed")) cfg.seed = f.seed;
  if (given("--seeds")) cfg.seeds = f.seeds;
  if (given("--trials")) cfg.trials = f.trials;
  if (given("--degree-cap")) cfg.degree_cap = f.degree_cap;
  if (f.certify) cfg.certify = true;
  if (f.no_springer) cfg.springer = false;
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Null-cone strata and Kirillov isotropy toolkit"};
  app.set_version_flag("--version", kToolVersion);
  app.require_subcommand(1);
  Flags flags;
  std::vector<Registered> subs = {
      {app.add_subcommand("analyze", "full pipeline"), Stage::Full},
      {app.add_subcommand("strata", "weights, Kempf candidates and strata"), Stage::Strata},
      {app.add_subcommand("orbits", "nilpotent orbit catalog of g"), Stage::Orbits},
      {app.add_subcommand("weights", "t_k-weights on k_perp"), Stage::Weights},
      {app.add_subcommand("springer", "Springer fiber dimensions"), Stage::Springer},
      {app.add_subcommand("verify-isotropy", "sampled isotropy verification and catalog"), Stage::Isotropy},
  };
  for (auto& s : subs) add_shared(s.app, flags);
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }
  const Registered* chosen = nullptr;
  for (const auto& s : subs)
    if (s.app->parsed()) chosen = &s;

  ScenarioConfig cfg;
  std::optional<PairData> pair;
  try {
    cfg = build_config(*chosen->app, flags);
    pair = resolve_pair(cfg);
  } catch (const Error& e) {
    std::cerr << "nullstrata: " << e.what() << "\n";
    return 2;
  }
  try {
    Analysis a = run_analysis(cfg, std::move(*pair), chosen->stage);
    if (!flags.quiet) std::cout << human_table(a);
    if (!flags.out.empty()) write_report_files(a, flags.out);
    if (!a.passed()) {
      for (const auto& c : a.checks)
        if (!c.passed) std::cerr << "nullstrata: check " << c.name << " failed: " << c.detail << "\n";
    }
    return exit_code(a);
  } catch (const Error& e) {
    std::cerr << "nullstrata: " << e.what() << "\n";
    return is_input_error(e.kind()) ? 2 : 1;
  }
}
