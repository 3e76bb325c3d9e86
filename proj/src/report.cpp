#include "nullstrata/scenario.hpp"

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <numeric>
#include <sstream>

#include "nullstrata/errors.hpp"

namespace nullstrata {

using nlohmann::ordered_json;

namespace {

ordered_json rat_list(std::span<const Rat> v) {
  ordered_json out = ordered_json::array();
  for (const auto& c : v) out.push_back(format_rat(c));
  return out;
}

ordered_json element_list(const LieAlgebra& g, const std::vector<Element>& xs) {
  ordered_json out = ordered_json::array();
  for (const auto& x : xs) out.push_back(g.format(x));
  return out;
}

ordered_json config_json(const ScenarioConfig& c) {
  ordered_json j;
  j["preset"] = c.preset;
  j["algebra"] = c.algebra;
  j["subalgebra"] = c.subalgebra;
  j["torus"] = c.torus;
  j["trials"] = c.trials;
  j["seed"] = c.seed;
  j["seeds"] = c.seeds;
  j["degree_cap"] = c.degree_cap;
  j["certify"] = c.certify;
  j["springer"] = c.springer;
  return j;
}

ordered_json closure_json(const ClosureSummary& c) {
  ordered_json j;
  if (c.cap_exceeded) {
    j["status"] = "cap_exceeded";
    j["cap"] = c.cap_exceeded->cap;
    j["degree"] = c.cap_exceeded->degree;
    return j;
  }
  j["status"] = "ok";
  j["dimension"] = c.dimension;
  j["homogeneous"] = c.homogeneous;
  j["parameters"] = c.parameters;
  ordered_json gb = ordered_json::array();
  if (c.ideal && c.ideal->gb)
    for (const auto& p : *c.ideal->gb) gb.push_back(format_polynomial(c.ideal->ring, p));
  j["groebner_basis"] = gb;
  return j;
}

ordered_json pair_json(const Analysis& a) {
  const auto& p = a.pair;
  ordered_json j;
  j["name"] = p.name.empty() ? "custom" : p.name;
  j["labels"] = p.g.labels();
  j["dim_g"] = p.g.dim();
  j["dim_k"] = p.k.dim();
  j["dim_k_perp"] = p.k_perp.dim();
  j["dim_t_k"] = p.t_k.dim();
  j["k_basis"] = element_list(p.g, p.k.basis_vectors());
  j["t_basis"] = element_list(p.g, p.t_basis);
  j["k_perp_basis"] = element_list(p.g, p.k_perp.basis_vectors());
  j["unipotent_generators"] = element_list(p.g, p.unipotent_gens);
  return j;
}

ordered_json violation_json(const Analysis& a, const PointViolation& v) {
  const auto& g = a.pair.g;
  ordered_json j;
  j["check"] = v.check;
  j["stratum"] = v.stratum_id;
  j["seed"] = v.seed;
  j["trial"] = v.trial;
  j["xi"] = g.format(v.point.xi);
  j["w"] = g.format(v.point.w);
  j["word"] = format_word(a.pair, v.point.word);
  j["orbit"] = v.point.orbit ? format_orbit(*v.point.orbit) : "unclassified";
  if (v.check == "isotropy") {
    j["u"] = g.format(v.isotropy.u);
    j["v"] = g.format(v.isotropy.v);
    j["omega"] = format_rat(v.isotropy.value);
  }
  return j;
}

}  // namespace

ordered_json report_json(const Analysis& a) {
  const auto& g = a.pair.g;
  const bool strata_stage = a.stage == Stage::Strata || a.stage == Stage::Isotropy || a.stage == Stage::Full;
  ordered_json r;
  r["schema"] = "nullstrata-report";
  r["schema_version"] = kReportSchemaVersion;
  ordered_json header;
  header["tool"] = "nullstrata";
  header["version"] = kToolVersion;
  header["command"] = to_string(a.stage);
  header["config"] = config_json(a.config);
  header["seeds"] = a.seeds;
  header["rng"] = "mt19937_64, seed_seq(seed lo, seed hi, stratum index, trial)";
  r["header"] = header;
  r["pair"] = pair_json(a);
  r["notes"] = a.notes;

  if (a.stage == Stage::Weights || strata_stage) {
    ordered_json w = ordered_json::array();
    for (const auto& d : a.weights) {
      ordered_json e;
      e["weight"] = rat_list(d.weight);
      e["dim"] = d.space.dim();
      e["basis"] = element_list(g, d.space.basis_vectors());
      w.push_back(e);
    }
    r["weights"] = w;
  }
  if (a.h_set) {
    ordered_json hs = ordered_json::array();
    for (const auto& c : a.h_set->entries) {
      ordered_json e;
      e["h"] = g.format(c.h);
      e["coords"] = rat_list(c.coords);
      ordered_json prov = ordered_json::array();
      for (const auto& v : c.provenance) prov.push_back(rat_list(v));
      e["weight_face"] = prov;
      hs.push_back(e);
    }
    r["candidates"] = hs;
  }
  if (strata_stage) {
    ordered_json ss = ordered_json::array();
    for (std::size_t i = 0; i < a.strata.size(); ++i) {
      const auto& s = a.strata[i];
      ordered_json e;
      e["id"] = s.id;
      e["h"] = g.format(s.h);
      e["dim_W"] = s.W.dim();
      e["W"] = element_list(g, s.W.basis_vectors());
      if (i < a.stratum_closures.size()) {
        ordered_json c = closure_json(a.stratum_closures[i]);
        c["parametrization"] = "exp of a basis of k_h^{<0}, ordered by h-level";
        e["closure"] = c;
      }
      ss.push_back(e);
    }
    r["strata"] = ss;
  }
  if (a.stage == Stage::Orbits || a.stage == Stage::Full) {
    ordered_json os = ordered_json::array();
    for (const auto& o : a.orbits) {
      ordered_json e;
      e["orbit"] = format_orbit(o.partition);
      e["dim"] = o.dim_orbit;
      e["representative"] = g.format(o.representative);
      os.push_back(e);
    }
    r["orbits"] = os;
  }
  if (a.sweep) {
    ordered_json cat = ordered_json::array();
    for (std::size_t i = 0; i < a.catalog.size(); ++i) {
      const auto& c = a.catalog[i];
      ordered_json e;
      e["stratum"] = c.stratum_id;
      e["orbit"] = c.orbit.label;
      e["orbit_dim"] = c.orbit.dim;
      e["trivial"] = c.trivial;
      e["samples"] = c.samples_used;
      e["dim_observed"] = c.dim_observed;
      e["dim_certified"] = c.dim_certified ? ordered_json(*c.dim_certified) : ordered_json(nullptr);
      e["isotropic"] = c.isotropic;
      e["lagrangian"] = c.lagrangian;
      e["holonomic"] = c.holonomic_dim_ok ? ordered_json(*c.holonomic_dim_ok) : ordered_json(nullptr);
      if (i < a.entry_closures.size() && !c.trivial && c.orbit.partition) e["closure"] = closure_json(a.entry_closures[i]);
      cat.push_back(e);
    }
    r["catalog"] = cat;
    r["sample_points"] = a.sweep->points;
  }
  if (a.stage == Stage::Springer || a.stage == Stage::Full) {
    ordered_json sp;
    sp["status"] = a.springer_ran ? "ran" : a.springer_note;
    ordered_json reps = ordered_json::array();
    for (const auto& s : a.springer) {
      ordered_json e;
      e["n"] = static_cast<int>(std::accumulate(s.partition.begin(), s.partition.end(), 0));
      e["partition"] = format_partition(s.partition);
      e["orbit_dim"] = s.orbit_dim;
      e["fiber_dim"] = s.fiber_dim;
      e["per_cell_dims"] = s.per_cell_dims;
      e["identity"] = s.identity_check;
      reps.push_back(e);
    }
    sp["fibers"] = reps;
    r["springer"] = sp;
  }
  ordered_json checks = ordered_json::array();
  for (const auto& c : a.checks) {
    ordered_json e;
    e["name"] = c.name;
    e["passed"] = c.passed;
    e["detail"] = c.detail;
    checks.push_back(e);
  }
  r["checks"] = checks;
  ordered_json wl = ordered_json::array();
  if (a.sweep)
    for (const auto& v : a.sweep->violations) wl.push_back(violation_json(a, v));
  r["witnesses"] = wl;
  r["status"] = a.passed() ? "ok" : "failed";
  return r;
}

std::string report_text(const Analysis& a) { return report_json(a).dump(2) + "\n"; }

std::string human_table(const Analysis& a) {
  std::ostringstream out;
  const auto& p = a.pair;
  out << "pair " << (p.name.empty() ? "custom" : p.name) << ": dim g " << p.g.dim() << ", dim k " << p.k.dim()
      << ", dim k_perp " << p.k_perp.dim() << ", dim t_k " << p.t_k.dim() << "\n";
  for (const auto& n : a.notes) out << "note: " << n << "\n";
  if (a.stage == Stage::Weights) {
    out << "weights on k_perp:\n";
    for (const auto& d : a.weights)
      out << "  " << std::left << std::setw(16) << format_vec(d.weight) << " dim " << d.space.dim() << "\n";
  }
  if (a.h_set) {
    out << "candidates H: " << a.h_set->entries.size() << "\n";
    for (std::size_t i = 0; i < a.strata.size(); ++i) {
      const auto& s = a.strata[i];
      out << "  " << std::left << std::setw(5) << s.id << " h = " << std::setw(24) << p.g.format(s.h) << " dim W "
          << s.W.dim();
      if (i < a.stratum_closures.size()) {
        const auto& c = a.stratum_closures[i];
        if (c.cap_exceeded) out << "  closure: cap exceeded";
        else out << "  closure dim " << c.dimension;
      }
      out << "\n";
    }
  }
  if (a.stage == Stage::Orbits || (a.stage == Stage::Full && !a.sweep)) {
    out << "orbits:\n";
    for (const auto& o : a.orbits)
      out << "  " << std::left << std::setw(16) << format_orbit(o.partition) << " dim " << o.dim_orbit << "\n";
  }
  if (a.sweep) {
    out << "catalog:\n";
    out << "  " << std::left << std::setw(8) << "stratum" << std::setw(18) << "orbit" << std::setw(6) << "dim"
        << std::setw(6) << "obs" << std::setw(6) << "cert" << std::setw(11) << "isotropic" << std::setw(11)
        << "lagrangian" << std::setw(10) << "holonomic" << "samples\n";
    auto flag = [](const std::optional<bool>& b) { return b ? (*b ? "yes" : "no") : "-"; };
    for (const auto& c : a.catalog) {
      out << "  " << std::left << std::setw(8) << c.stratum_id << std::setw(18) << c.orbit.label << std::setw(6)
          << c.orbit.dim << std::setw(6) << c.dim_observed << std::setw(6)
          << (c.dim_certified ? std::to_string(*c.dim_certified) : "-") << std::setw(11)
          << (c.isotropic ? "yes" : "no") << std::setw(11) << (c.lagrangian ? "yes" : "no") << std::setw(10)
          << flag(c.holonomic_dim_ok) << c.samples_used << "\n";
    }
  }
  if (a.stage == Stage::Springer || a.stage == Stage::Full) {
    if (!a.springer_ran) {
      out << "springer: " << a.springer_note << "\n";
    } else {
      out << "springer fibers:\n";
      for (const auto& s : a.springer)
        out << "  " << std::left << std::setw(10) << format_partition(s.partition) << " orbit dim "
            << s.orbit_dim << ", fiber dim " << s.fiber_dim << ", identity " << (s.identity_check ? "yes" : "no")
            << "\n";
    }
  }
  out << "checks:\n";
  for (const auto& c : a.checks)
    out << "  " << std::left << std::setw(22) << c.name << (c.passed ? "PASS" : "FAIL") << "  " << c.detail << "\n";
  out << "status: " << (a.passed() ? "ok" : "failed") << "\n";
  return out.str();
}

void write_report_files(const Analysis& a, const std::string& dir) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw Error(ErrorKind::ConfigError, "cannot create output directory '" + dir + "': " + ec.message());
  {
    std::ofstream out(fs::path(dir) / "report.json", std::ios::binary);
    if (!out) throw Error(ErrorKind::ConfigError, "cannot write to '" + dir + "'");
    out << report_text(a);
  }
  auto dump = [&](const ClosureSummary& c, const std::string& name) {
    if (!c.ideal) return;
    fs::create_directories(fs::path(dir) / "ideals");
    std::ofstream out(fs::path(dir) / "ideals" / name, std::ios::binary);
    write_ideal(out, *c.ideal);
  };
  for (std::size_t i = 0; i < a.stratum_closures.size(); ++i) dump(a.stratum_closures[i], a.strata[i].id + ".txt");
  for (std::size_t i = 0; i < a.entry_closures.size(); ++i)
    dump(a.entry_closures[i], "entry" + std::to_string(i) + ".txt");
}

}  // namespace nullstrata
