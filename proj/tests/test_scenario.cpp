#include <cstdlib>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "nullstrata/errors.hpp"
#include "nullstrata/scenario.hpp"
#include "test_util.hpp"

using namespace nullstrata;
using testutil::r;

namespace {

ScenarioConfig parse(const std::string& text) {
  std::istringstream in(text);
  return parse_config(in, "test.ini");
}

std::string config_error(const std::string& text) {
  try {
    parse(text);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ConfigError);
    return e.what();
  }
  return "";
}

ErrorKind resolve_error(const ScenarioConfig& cfg) {
  try {
    resolve_pair(cfg);
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error");
  return ErrorKind::ConfigError;
}

ScenarioConfig preset_config(const std::string& name) {
  ScenarioConfig c;
  c.preset = name;
  c.certify = true;
  return c;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("config: defaults and values") {
  ScenarioConfig d = parse("");
  CHECK(d.trials == 25);
  CHECK(d.seed == 0);
  CHECK(d.degree_cap == 8);
  CHECK(d.seeds == 1);
  CHECK_FALSE(d.certify);
  CHECK(d.springer);
  ScenarioConfig c = parse(
      "# scenario\n"
      "[pair]\n"
      "algebra = sl(3)   # trailing comment\n"
      "subalgebra = e12; h1\n"
      "\n"
      "[run]\n"
      "trials = 7\n"
      "seed = 12\n"
      "seeds = 3\n"
      "degree_cap = 10\n"
      "certify = yes\n"
      "springer = false\n");
  CHECK(c.algebra == "sl(3)");
  CHECK(c.subalgebra == "e12; h1");
  CHECK(c.trials == 7);
  CHECK(c.seed == 12);
  CHECK(c.seeds == 3);
  CHECK(c.degree_cap == 10);
  CHECK(c.certify);
  CHECK_FALSE(c.springer);
}

TEST_CASE("config: strict mode names the line") {
  CHECK(config_error("[run]\ntrails = 3\n").find("test.ini:2: unknown key 'trails' in [run]") != std::string::npos);
  CHECK(config_error("[pair]\npreset = sl2-torus\n[output]\n").find("test.ini:3: unknown section") != std::string::npos);
  CHECK(config_error("trials = 3\n").find("test.ini:1: key 'trials' outside of a section") != std::string::npos);
  CHECK(config_error("[run]\ntrials = many\n").find("test.ini:2: trials: not an integer") != std::string::npos);
  CHECK(config_error("[run]\ncertify = maybe\n").find("not a boolean") != std::string::npos);
  CHECK(config_error("[run]\ntrials = 3\ntrials = 4\n").find("test.ini:3: duplicate key") != std::string::npos);
  CHECK(config_error("[run\n").find("malformed section header") != std::string::npos);
  CHECK(config_error("[run]\njust words\n").find("expected 'key = value'") != std::string::npos);
}

TEST_CASE("config: validation") {
  ScenarioConfig c;
  CHECK_THROWS_AS(validate_config(c), Error);
  c.preset = "sl2-torus";
  CHECK_NOTHROW(validate_config(c));
  c.degree_cap = 0;
  CHECK_THROWS_AS(validate_config(c), Error);
  c.degree_cap = kMaxDegreeCap + 1;
  CHECK_THROWS_AS(validate_config(c), Error);
  c.degree_cap = 8;
  c.algebra = "sl(2)";
  CHECK_THROWS_AS(validate_config(c), Error);
  c.algebra.clear();
  c.trials = 0;
  CHECK_THROWS_AS(validate_config(c), Error);
  CHECK(resolve_error(preset_config("sl4-nothing")) == ErrorKind::ConfigError);
}

TEST_CASE("parse_element inverts format") {
  testutil::RatGen gen(31);
  for (const char* name : {"sl(2)", "sl(3)", "sl(2)+sl(2)"}) {
    LieAlgebra g = builtin_algebra(name);
    for (int i = 0; i < 40; ++i) {
      Element x = gen.vec(g.dim(), 4);
      if (i % 5 == 0) x = g.zero();
      CHECK(parse_element(g, g.format(x)) == x);
    }
  }
  LieAlgebra g = LieAlgebra::sl(3);
  CHECK_THROWS_AS(parse_element(g, "e12 + x9"), Error);
  CHECK_THROWS_AS(parse_element(g, ""), Error);
  CHECK_THROWS_AS(parse_element(g, "e12 +"), Error);
}

TEST_CASE("generator lists: JSON vectors and label expressions agree") {
  LieAlgebra g = LieAlgebra::sl(2);
  auto a = parse_generator_list(g, R"([[1, 0, 0], [0, "1/2", -3]])");
  auto b = parse_generator_list(g, "e; 1/2*h - 3*f");
  CHECK(a == b);
  CHECK(b[1][1] == r(1, 2));
  try {
    parse_generator_list(g, "[[1, 0]]");
    FAIL("accepted a short vector");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DimensionMismatch);
  }
  CHECK_THROWS_AS(parse_generator_list(g, "[[1.5, 0, 0]]"), Error);
  CHECK_THROWS_AS(parse_generator_list(g, "[[1, 0, 0]"), Error);
  CHECK_THROWS_AS(parse_generator_list(g, " ; "), Error);
}

TEST_CASE("resolve_pair: presets, custom pairs and input errors") {
  ScenarioConfig c;
  c.subalgebra = "sl3-principal-sl2";
  CHECK(resolve_pair(c).name == "sl3-principal-sl2");
  c.algebra = "sl(3)";
  CHECK(resolve_pair(c).name == "sl3-principal-sl2");
  c.algebra = "sl(2)";
  CHECK(resolve_error(c) == ErrorKind::ConfigError);

  ScenarioConfig custom;
  custom.algebra = "sl(3)";
  custom.subalgebra = "e12; h1; e21";
  PairData p = resolve_pair(custom);
  CHECK(p.name.empty());
  CHECK(p.k.dim() == 3);
  CHECK(p.k_perp.dim() == 5);

  custom.subalgebra = "e12; h1";
  CHECK(resolve_error(custom) == ErrorKind::NotReductive);
  custom.algebra = "sl(2)";
  custom.subalgebra = "e + 2*f";
  CHECK(resolve_error(custom) == ErrorKind::IrrationalEigenvalues);
  custom.algebra = "/nonexistent/file.sc";
  CHECK(resolve_error(custom) == ErrorKind::ConfigError);
}

TEST_CASE("run_analysis: sl2-torus catalog") {
  Analysis a = run_analysis(preset_config("sl2-torus"), Stage::Full);
  CHECK(a.passed());
  CHECK(exit_code(a) == 0);
  REQUIRE(a.catalog.size() == 3);
  for (std::size_t i = 0; i < 2; ++i) {
    CHECK(a.catalog[i].orbit.label == "(2)");
    CHECK(a.catalog[i].dim_observed == 1);
    CHECK(a.catalog[i].dim_certified == 1);
    CHECK(a.catalog[i].lagrangian);
    CHECK(a.catalog[i].holonomic_dim_ok == true);
  }
  CHECK(a.catalog[2].trivial);
  CHECK(a.catalog[2].dim_certified == 0);
  auto j = report_json(a);
  CHECK(j["status"] == "ok");
  CHECK(j["pair"]["dim_k_perp"] == 2);
  CHECK(j["catalog"].size() == 3);
  CHECK(j["witnesses"].empty());
}

TEST_CASE("run_analysis: sl2-full notes the empty annihilator") {
  Analysis a = run_analysis(preset_config("sl2-full"), Stage::Full);
  CHECK(a.passed());
  CHECK(a.strata.empty());
  REQUIRE(a.catalog.size() == 1);
  CHECK(a.catalog[0].trivial);
  CHECK(a.notes == std::vector<std::string>{"k_perp = 0"});
  CHECK(human_table(a).find("note: k_perp = 0") != std::string::npos);
}

TEST_CASE("run_analysis: stages compute only what they report") {
  ScenarioConfig c = preset_config("sl3-principal-sl2");
  Analysis w = run_analysis(c, Stage::Weights);
  CHECK(w.weights.size() == 5);
  CHECK_FALSE(w.h_set);
  CHECK_FALSE(w.sweep);
  auto jw = report_json(w);
  CHECK(jw.contains("weights"));
  CHECK_FALSE(jw.contains("strata"));
  CHECK_FALSE(jw.contains("catalog"));

  Analysis s = run_analysis(c, Stage::Strata);
  CHECK(s.strata.size() == 2);
  CHECK(s.stratum_closures.size() == 2);
  CHECK_FALSE(s.sweep);

  Analysis o = run_analysis(c, Stage::Orbits);
  CHECK(o.orbits.size() == 3);
  CHECK(report_json(o)["orbits"].size() == 3);

  Analysis sp = run_analysis(c, Stage::Springer);
  CHECK(sp.springer_ran);
  CHECK(sp.springer.size() == 3);

  c.springer = false;
  Analysis full = run_analysis(c, Stage::Full);
  CHECK_FALSE(full.springer_ran);
  CHECK(full.springer_note == "disabled by configuration");
  CHECK_FALSE(full.catalog[0].holonomic_dim_ok);
}

TEST_CASE("run_analysis: springer is disabled beyond sl(3)") {
  ScenarioConfig c;
  c.algebra = "sl(4)";
  c.subalgebra = "h1; h2; h3";
  c.trials = 1;
  Analysis a = run_analysis(c, Stage::Springer);
  CHECK_FALSE(a.springer_ran);
  CHECK(a.springer_note.find("disabled") == 0);
  CHECK(a.passed());
}

TEST_CASE("run_analysis: a degree cap overflow fails the run") {
  ScenarioConfig c = preset_config("sl3-principal-sl2");
  c.degree_cap = 1;
  Analysis a = run_analysis(c, Stage::Full);
  CHECK_FALSE(a.passed());
  CHECK(exit_code(a) == 1);
  CHECK(a.stratum_closures[0].cap_exceeded);
  CHECK(report_json(a)["status"] == "failed");
}

TEST_CASE("report: witnesses are serialized") {
  Analysis a = run_analysis(preset_config("sl2-torus"), Stage::Isotropy);
  PointViolation v;
  v.check = "isotropy";
  v.stratum_id = "S1";
  v.seed = 3;
  v.trial = 4;
  v.point.xi = a.pair.g.basis_element(0);
  v.point.w = v.point.xi;
  v.isotropy.isotropic = false;
  v.isotropy.u = a.pair.g.basis_element(0);
  v.isotropy.v = a.pair.g.basis_element(2);
  v.isotropy.value = r(-1, 2);
  a.sweep->violations.push_back(v);
  auto w = report_json(a)["witnesses"];
  REQUIRE(w.size() == 1);
  CHECK(w[0]["check"] == "isotropy");
  CHECK(w[0]["xi"] == "e");
  CHECK(w[0]["word"] == "1");
  CHECK(w[0]["omega"] == "-1/2");
}

TEST_CASE("report: identical configs give identical bytes") {
  for (const auto& name : preset_names()) {
    ScenarioConfig c = preset_config(name);
    c.seeds = 2;
    CHECK(report_text(run_analysis(c, Stage::Full)) == report_text(run_analysis(c, Stage::Full)));
  }
}

TEST_CASE("report: golden files") {
  const bool update = std::getenv("NULLSTRATA_UPDATE_GOLDEN") != nullptr;
  for (const auto& name : preset_names()) {
    CAPTURE(name);
    const std::string path = std::string(NULLSTRATA_GOLDEN_DIR) + "/" + name + ".json";
    const std::string text = report_text(run_analysis(preset_config(name), Stage::Full));
    if (update) std::ofstream(path, std::ios::binary) << text;
    CHECK(text == read_file(path));
  }
}
