#include "nullstrata/scenario.hpp"

#include <algorithm>
#include <cctype>
#include <exception>
#include <fstream>
#include <istream>
#include <map>
#include <set>

#include "nullstrata/errors.hpp"

namespace nullstrata {

const char* const kToolVersion = "0.1.0";

namespace {

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

std::string strip_spaces(const std::string& s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  return out;
}

long long parse_integer(const std::string& key, const std::string& value) {
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(value, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != value.size()) throw Error(ErrorKind::ConfigError, key + ": not an integer: '" + value + "'");
  return v;
}

bool parse_bool(const std::string& key, const std::string& value) {
  std::string v;
  for (char c : value) v += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (v == "true" || v == "yes" || v == "on" || v == "1") return true;
  if (v == "false" || v == "no" || v == "off" || v == "0") return false;
  throw Error(ErrorKind::ConfigError, key + ": not a boolean: '" + value + "'");
}

const std::map<std::string, std::string>& preset_algebras() {
  static const std::map<std::string, std::string> m = {{"sl2-torus", "sl(2)"},
                                                       {"sl2-full", "sl(2)"},
                                                       {"sl2xsl2-diagonal", "sl(2)+sl(2)"},
                                                       {"sl3-principal-sl2", "sl(3)"},
                                                       {"sl3-levi-gl2", "sl(3)"}};
  return m;
}

LieAlgebra load_algebra(const std::string& source) {
  if (is_builtin_name(source)) return builtin_algebra(source);
  std::ifstream in(source);
  if (!in) throw Error(ErrorKind::ConfigError, "algebra '" + source + "' is neither a builtin name nor a readable file");
  return parse_structure_constants(in);
}

}  // namespace

void set_config_value(ScenarioConfig& cfg, const std::string& section, const std::string& key,
                      const std::string& value) {
  if (section == "pair") {
    if (key == "preset") cfg.preset = value;
    else if (key == "algebra") cfg.algebra = value;
    else if (key == "subalgebra") cfg.subalgebra = value;
    else if (key == "torus") cfg.torus = value;
    else throw Error(ErrorKind::ConfigError, "unknown key '" + key + "' in [pair]");
  } else if (section == "run") {
    if (key == "trials") cfg.trials = static_cast<int>(parse_integer(key, value));
    else if (key == "seed") {
      long long s = parse_integer(key, value);
      if (s < 0) throw Error(ErrorKind::ConfigError, "seed must be nonnegative");
      cfg.seed = static_cast<std::uint64_t>(s);
    } else if (key == "seeds") cfg.seeds = static_cast<int>(parse_integer(key, value));
    else if (key == "degree_cap") cfg.degree_cap = static_cast<int>(parse_integer(key, value));
    else if (key == "certify") cfg.certify = parse_bool(key, value);
    else if (key == "springer") cfg.springer = parse_bool(key, value);
    else throw Error(ErrorKind::ConfigError, "unknown key '" + key + "' in [run]");
  } else if (section.empty()) {
    throw Error(ErrorKind::ConfigError, "key '" + key + "' outside of a section");
  } else {
    throw Error(ErrorKind::ConfigError, "unknown section [" + section + "]");
  }
}

ScenarioConfig parse_config(std::istream& in, const std::string& source) {
  ScenarioConfig cfg;
  std::string line, section;
  std::set<std::pair<std::string, std::string>> seen;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string where = source + ":" + std::to_string(lineno) + ": ";
    if (auto c = line.find('#'); c != std::string::npos) line.erase(c);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') throw Error(ErrorKind::ConfigError, where + "malformed section header '" + line + "'");
      section = trim(line.substr(1, line.size() - 2));
      if (section != "pair" && section != "run") {
        throw Error(ErrorKind::ConfigError, where + "unknown section [" + section + "]");
      }
      continue;
    }
    auto eq = line.find('=');
    if (eq == std::string::npos) throw Error(ErrorKind::ConfigError, where + "expected 'key = value', got '" + line + "'");
    std::string key = trim(line.substr(0, eq)), value = trim(line.substr(eq + 1));
    if (key.empty()) throw Error(ErrorKind::ConfigError, where + "empty key");
    if (!seen.insert({section, key}).second) throw Error(ErrorKind::ConfigError, where + "duplicate key '" + key + "'");
    try {
      set_config_value(cfg, section, key, value);
    } catch (const Error& e) {
      std::string msg = e.what();
      const std::string prefix = "ConfigError: ";
      if (msg.rfind(prefix, 0) == 0) msg.erase(0, prefix.size());
      throw Error(ErrorKind::ConfigError, where + msg);
    }
  }
  return cfg;
}

void validate_config(const ScenarioConfig& cfg) {
  if (cfg.preset.empty() && cfg.algebra.empty() && cfg.subalgebra.empty()) {
    throw Error(ErrorKind::ConfigError, "no pair given: set preset, or algebra and subalgebra");
  }
  if (!cfg.preset.empty() && (!cfg.algebra.empty() || !cfg.subalgebra.empty())) {
    throw Error(ErrorKind::ConfigError, "preset excludes algebra and subalgebra");
  }
  if (cfg.preset.empty() && cfg.subalgebra.empty()) throw Error(ErrorKind::ConfigError, "algebra given without subalgebra");
  if (!cfg.preset.empty() && !cfg.torus.empty()) throw Error(ErrorKind::ConfigError, "preset excludes torus");
  if (cfg.trials < 1) throw Error(ErrorKind::ConfigError, "trials must be positive");
  if (cfg.seeds < 1) throw Error(ErrorKind::ConfigError, "seeds must be positive");
  if (cfg.degree_cap < 1 || cfg.degree_cap > kMaxDegreeCap) {
    throw Error(ErrorKind::ConfigError, "degree_cap must lie in 1.." + std::to_string(kMaxDegreeCap));
  }
}

std::vector<Element> parse_generator_list(const LieAlgebra& g, const std::string& text) {
  const std::string t = trim(text);
  std::vector<Element> out;
  if (!t.empty() && t.front() == '[') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(t);
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorKind::ParseError, std::string("generator list: ") + e.what());
    }
    if (!j.is_array()) throw Error(ErrorKind::ParseError, "generator list must be an array of vectors");
    for (const auto& row : j) {
      if (!row.is_array()) throw Error(ErrorKind::ParseError, "generator list must be an array of vectors");
      if (row.size() != g.dim()) {
        throw Error(ErrorKind::DimensionMismatch, "generator has " + std::to_string(row.size()) +
                                                      " coordinates, the algebra has dimension " +
                                                      std::to_string(g.dim()));
      }
      Element x;
      for (const auto& c : row) {
        if (c.is_number_integer()) x.push_back(Rat(std::to_string(c.get<long long>())));
        else if (c.is_string()) x.push_back(parse_rat(c.get<std::string>()));
        else throw Error(ErrorKind::ParseError, "coordinates must be integers or \"p/q\" strings");
      }
      out.push_back(std::move(x));
    }
    return out;
  }
  std::size_t start = 0;
  while (start <= t.size()) {
    std::size_t end = t.find(';', start);
    if (end == std::string::npos) end = t.size();
    std::string piece = trim(t.substr(start, end - start));
    if (!piece.empty()) out.push_back(parse_element(g, piece));
    start = end + 1;
  }
  if (out.empty()) throw Error(ErrorKind::ParseError, "empty generator list");
  return out;
}

PairData resolve_pair(const ScenarioConfig& cfg) {
  validate_config(cfg);
  std::string preset = cfg.preset;
  if (preset.empty() && preset_algebras().count(trim(cfg.subalgebra))) {
    preset = trim(cfg.subalgebra);
    if (!cfg.algebra.empty() && strip_spaces(cfg.algebra) != preset_algebras().at(preset)) {
      throw Error(ErrorKind::ConfigError, "preset '" + preset + "' lives in " + preset_algebras().at(preset) +
                                              ", not in " + cfg.algebra);
    }
    if (!cfg.torus.empty()) throw Error(ErrorKind::ConfigError, "preset excludes torus");
  }
  if (!preset.empty()) return make_preset(preset);
  LieAlgebra g = cfg.algebra.empty() ? throw Error(ErrorKind::ConfigError, "subalgebra given without algebra")
                                     : load_algebra(cfg.algebra);
  auto gens = parse_generator_list(g, cfg.subalgebra);
  std::optional<std::vector<Element>> torus;
  if (!cfg.torus.empty()) torus = parse_generator_list(g, cfg.torus);
  return make_pair(g, gens, torus);
}

std::string to_string(Stage s) {
  switch (s) {
    case Stage::Weights: return "weights";
    case Stage::Strata: return "strata";
    case Stage::Orbits: return "orbits";
    case Stage::Springer: return "springer";
    case Stage::Isotropy: return "verify-isotropy";
    case Stage::Full: return "analyze";
  }
  return "analyze";
}

bool Analysis::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

std::vector<std::uint64_t> seed_list(const ScenarioConfig& cfg) {
  std::vector<std::uint64_t> out;
  for (int i = 0; i < cfg.seeds; ++i) out.push_back(cfg.seed + static_cast<std::uint64_t>(i));
  return out;
}

namespace {

ClosureSummary summarize(std::variant<ClosureIdeal, CapExceeded> r) {
  ClosureSummary s;
  if (auto* cap = std::get_if<CapExceeded>(&r)) {
    s.cap_exceeded = *cap;
    return s;
  }
  auto& c = std::get<ClosureIdeal>(r);
  s.dimension = ideal_dimension(c.ideal);
  s.homogeneous = c.homogeneous;
  s.parameters = c.parameters;
  s.ideal = std::move(c.ideal);
  return s;
}

bool springer_supported(const LieAlgebra& g) {
  if (!g.has_defining_rep()) return false;
  return std::all_of(g.factors().begin(), g.factors().end(), [](const SlFactor& f) { return f.n <= 3; });
}

void certify(Analysis& a) {
  struct Task {
    const Stratum* stratum;
    std::optional<PartitionTuple> orbit;
    ClosureSummary* out;
  };
  const Stratum origin{"0", a.pair.g.zero(), Subspace(a.pair.g.dim())};
  a.stratum_closures.assign(a.strata.size(), {});
  a.entry_closures.assign(a.catalog.size(), {});
  std::vector<Task> tasks;
  for (std::size_t i = 0; i < a.strata.size(); ++i) tasks.push_back({&a.strata[i], std::nullopt, &a.stratum_closures[i]});
  for (std::size_t i = 0; i < a.catalog.size(); ++i) {
    const auto& e = a.catalog[i];
    if (e.trivial) tasks.push_back({&origin, std::nullopt, &a.entry_closures[i]});
    else if (e.orbit.partition) tasks.push_back({&a.strata[e.stratum_index], e.orbit.partition, &a.entry_closures[i]});
  }
  std::vector<std::exception_ptr> errors(tasks.size());
  const int cap = a.config.degree_cap;
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < static_cast<long>(tasks.size()); ++i) {
    auto& t = tasks[static_cast<std::size_t>(i)];
    try {
      *t.out = summarize(stratum_closure_ideal(a.pair, *t.stratum, cap, t.orbit));
    } catch (...) {
      errors[static_cast<std::size_t>(i)] = std::current_exception();
    }
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  for (std::size_t i = 0; i < a.catalog.size(); ++i) {
    const auto& c = a.entry_closures[i];
    if (c.ideal) a.catalog[i].dim_certified = c.dimension;
  }
}

void add_check(Analysis& a, std::string name, bool passed, std::string detail) {
  a.checks.push_back({std::move(name), passed, std::move(detail)});
}

void evaluate_checks(Analysis& a) {
  if (!a.orbits.empty()) {
    bool ok = true;
    std::string detail = std::to_string(a.orbits.size()) + " orbits";
    for (const auto& o : a.orbits) {
      int formula = 0;
      for (const auto& p : o.partition) formula += orbit_dim_formula(p);
      if (o.dim_orbit != formula || o.dim_orbit % 2 != 0) {
        ok = false;
        detail = "orbit " + format_orbit(o.partition) + ": dim " + std::to_string(o.dim_orbit) + ", formula " +
                 std::to_string(formula);
        break;
      }
    }
    add_check(a, "orbit_dimensions", ok, detail);
  }
  if (a.sweep) {
    std::size_t iso = 0, other = 0;
    for (const auto& v : a.sweep->violations) (v.check == "isotropy" ? iso : other)++;
    add_check(a, "isotropy", iso == 0,
              std::to_string(a.sweep->points) + " points, " + std::to_string(iso) + " violations");
    add_check(a, "sample_consistency", other == 0, std::to_string(other) + " violations");
    bool bound = true;
    std::string detail = "all groups";
    for (const auto& g : a.sweep->groups)
      if (!g.dim_bound_ok) {
        bound = false;
        detail = g.stratum_id + " " + g.orbit.label + ": dim_observed " + std::to_string(g.dim_observed) +
                 " > " + std::to_string(g.orbit.dim) + "/2";
        break;
      }
    add_check(a, "dimension_bound", bound, detail);
  }
  if (!a.stratum_closures.empty() || !a.entry_closures.empty()) {
    std::string cap_detail = "none";
    bool cap_ok = true;
    auto note_cap = [&](const ClosureSummary& c, const std::string& what) {
      if (c.cap_exceeded && cap_ok) {
        cap_ok = false;
        cap_detail = what + ": degree " + std::to_string(c.cap_exceeded->degree) + " > cap " +
                     std::to_string(c.cap_exceeded->cap);
      }
    };
    for (std::size_t i = 0; i < a.stratum_closures.size(); ++i) note_cap(a.stratum_closures[i], a.strata[i].id);
    for (std::size_t i = 0; i < a.entry_closures.size(); ++i)
      note_cap(a.entry_closures[i], a.catalog[i].stratum_id + " " + a.catalog[i].orbit.label);
    add_check(a, "degree_cap", cap_ok, cap_detail);

    bool conc = true;
    std::string detail;
    std::size_t compared = 0;
    if (!a.catalog.empty()) {
      for (std::size_t i = 0; i < a.catalog.size() && conc; ++i) {
        const auto& e = a.catalog[i];
        if (!e.dim_certified) continue;
        ++compared;
        if (*e.dim_certified != e.dim_observed) {
          conc = false;
          detail = e.stratum_id + " " + e.orbit.label + ": ideal dimension " + std::to_string(*e.dim_certified) +
                   ", observed " + std::to_string(e.dim_observed);
        }
      }
      for (std::size_t s = 0; s < a.strata.size() && conc; ++s) {
        const auto& c = a.stratum_closures[s];
        if (!c.ideal) continue;
        int observed = -1;
        for (const auto& e : a.catalog)
          if (!e.trivial && e.stratum_index == s) observed = std::max(observed, e.dim_observed);
        if (observed < 0) continue;
        ++compared;
        if (c.dimension != observed) {
          conc = false;
          detail = a.strata[s].id + ": closure dimension " + std::to_string(c.dimension) + ", observed " +
                   std::to_string(observed);
        }
      }
      if (conc) detail = cap_ok ? std::to_string(compared) + " comparisons" : "incomplete: degree cap exceeded";
      add_check(a, "groebner_concordance", conc && cap_ok, detail);
    }
    bool homog = true;
    for (const auto& c : a.stratum_closures)
      if (c.ideal && !c.homogeneous) homog = false;
    add_check(a, "closure_homogeneous", homog, homog ? "all stratum closures" : "inhomogeneous generator");
  }
  if (a.springer_ran) {
    bool ok = std::all_of(a.springer.begin(), a.springer.end(), [](const SpringerReport& r) { return r.identity_check; });
    add_check(a, "springer_identity", ok, std::to_string(a.springer.size()) + " partitions");
    if (a.sweep) {
      bool hol = true;
      std::string detail = std::to_string(a.catalog.size()) + " entries";
      for (const auto& e : a.catalog)
        if (e.holonomic_dim_ok && !*e.holonomic_dim_ok) {
          hol = false;
          detail = e.stratum_id + " " + e.orbit.label;
          break;
        }
      add_check(a, "holonomicity", hol, detail);
    }
  }
}

}  // namespace

Analysis run_analysis(const ScenarioConfig& cfg, Stage stage) { return run_analysis(cfg, resolve_pair(cfg), stage); }

Analysis run_analysis(const ScenarioConfig& cfg, PairData pair, Stage stage) {
  validate_config(cfg);
  Analysis a(std::move(pair));
  a.config = cfg;
  a.stage = stage;
  a.seeds = seed_list(cfg);
  const LieAlgebra& g = a.pair.g;
  if (a.pair.k_perp.dim() == 0) a.notes.push_back("k_perp = 0");

  const bool needs_strata = stage == Stage::Strata || stage == Stage::Isotropy || stage == Stage::Full;
  if (stage == Stage::Weights || needs_strata) a.weights = weight_table(a.pair, a.pair.k_perp);
  if (needs_strata) {
    a.h_set = kempf_candidates(a.pair, a.weights);
    a.strata = strata(a.pair, *a.h_set);
  }
  if (stage == Stage::Orbits || stage == Stage::Full) {
    if (g.has_defining_rep()) a.orbits = orbit_catalog(g);
    else a.notes.push_back("no defining representation: orbits are not classified");
  }
  if (stage == Stage::Isotropy || stage == Stage::Full) {
    a.sweep = verify_isotropy(a.pair, a.strata, cfg.trials, a.seeds);
    a.catalog = assemble_catalog(a.pair, *a.sweep);
  }
  if (cfg.certify && needs_strata) certify(a);

  if ((stage == Stage::Springer || stage == Stage::Full) && cfg.springer) {
    if (!springer_supported(g)) {
      a.springer_note = "disabled: needs sl(n) factors with n <= 3";
    } else {
      a.springer_ran = true;
      std::set<std::size_t> ranks;
      for (const auto& f : g.factors()) ranks.insert(f.n);
      for (auto n : ranks)
        for (const auto& p : partitions(static_cast<int>(n))) a.springer.push_back(springer_fiber(n, p, cfg.degree_cap));
      for (auto& e : a.catalog) holonomicity_check(e, g, cfg.degree_cap);
    }
  } else if (stage == Stage::Springer || stage == Stage::Full) {
    a.springer_note = "disabled by configuration";
  }
  evaluate_checks(a);
  return a;
}

int exit_code(const Analysis& a) { return a.passed() ? 0 : 1; }

bool is_input_error(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DimensionMismatch:
    case ErrorKind::JacobiViolation:
    case ErrorKind::AntisymmetryViolation:
    case ErrorKind::DegenerateKilling:
    case ErrorKind::NotClosedUnderBracket:
    case ErrorKind::NotReductive:
    case ErrorKind::NoSplitCartan:
    case ErrorKind::IrrationalEigenvalues:
    case ErrorKind::NotSemisimpleOrIrrational:
    case ErrorKind::IndefiniteForm:
    case ErrorKind::UnsupportedType:
    case ErrorKind::UnsupportedRank:
    case ErrorKind::ParseError:
    case ErrorKind::ConfigError:
      return true;
    default:
      return false;
  }
}

}  // namespace nullstrata
