#pragma once
// Scenario configuration, the staged analysis pipeline and its reports.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "nullstrata/errors.hpp"
#include "nullstrata/groebner.hpp"
#include "nullstrata/springer.hpp"
#include "nullstrata/strata_geometry.hpp"

#include "json.hpp"

namespace nullstrata {

constexpr int kReportSchemaVersion = 1;
extern const char* const kToolVersion;

struct ScenarioConfig {
  std::string preset;
  std::string algebra;     // builtin name or structure-constant file
  std::string subalgebra;  // preset name, JSON coordinate vectors, or "x; y; ..." label expressions
  std::string torus;       // optional t_k hint, same syntax as subalgebra
  int trials = 25;
  std::uint64_t seed = 0;
  int seeds = 1;  // seeds seed, seed + 1, ..., seed + seeds - 1
  int degree_cap = 8;
  bool certify = false;
  bool springer = true;
};

// Line-oriented `key = value` with [pair] and [run] sections; `#` starts a
// comment. Unknown sections or keys and malformed values throw
// ConfigError naming the source and line.
ScenarioConfig parse_config(std::istream& in, const std::string& source = "config");
// Applies `key = value` to the section's fields; throws ConfigError.
void set_config_value(ScenarioConfig& cfg, const std::string& section, const std::string& key,
                      const std::string& value);
// Range and consistency checks; throws ConfigError.
void validate_config(const ScenarioConfig& cfg);

std::vector<Element> parse_generator_list(const LieAlgebra& g, const std::string& text);
PairData resolve_pair(const ScenarioConfig& cfg);

enum class Stage { Weights, Strata, Orbits, Springer, Isotropy, Full };
std::string to_string(Stage s);

struct ClosureSummary {
  std::optional<CapExceeded> cap_exceeded;
  int dimension = -1;
  bool homogeneous = true;
  std::size_t parameters = 0;
  std::optional<Ideal> ideal;
};

struct CheckResult {
  std::string name;
  bool passed = true;
  std::string detail;
};

struct Analysis {
  explicit Analysis(PairData p) : pair(std::move(p)) {}

  ScenarioConfig config;
  Stage stage = Stage::Full;
  std::vector<std::uint64_t> seeds;
  PairData pair;
  std::vector<WeightDatum> weights;  // on k_perp
  std::optional<CandidateSet> h_set;
  std::vector<Stratum> strata;
  std::vector<ClosureSummary> stratum_closures;  // per stratum, with certify
  std::vector<OrbitType> orbits;
  std::optional<IsotropySweep> sweep;
  std::vector<CatalogEntry> catalog;
  std::vector<ClosureSummary> entry_closures;  // per catalog entry, with certify
  bool springer_ran = false;
  std::string springer_note;
  std::vector<SpringerReport> springer;
  std::vector<CheckResult> checks;
  std::vector<std::string> notes;

  bool passed() const;
};

std::vector<std::uint64_t> seed_list(const ScenarioConfig& cfg);

// Runs the stages needed for `stage` and evaluates the checks.
Analysis run_analysis(const ScenarioConfig& cfg, Stage stage);
Analysis run_analysis(const ScenarioConfig& cfg, PairData pair, Stage stage);

nlohmann::ordered_json report_json(const Analysis& a);
std::string report_text(const Analysis& a);  // report_json dumped with 2-space indent
std::string human_table(const Analysis& a);

// Writes report.json and, with certify, ideals/*.txt under `dir`.
void write_report_files(const Analysis& a, const std::string& dir);

// 0 all checks passed, 1 theorem violation or failed invariant, 2 input error.
int exit_code(const Analysis& a);
bool is_input_error(ErrorKind kind);

}  // namespace nullstrata
