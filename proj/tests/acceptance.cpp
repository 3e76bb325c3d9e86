// Acceptance gate: one PASS/FAIL line per criterion. All checks are exact;
// the only numeric tolerance is the 60 s runtime budget per preset.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "nullstrata/errors.hpp"
#include "nullstrata/grading.hpp"
#include "nullstrata/scenario.hpp"

using namespace nullstrata;

namespace {

constexpr int kTrials = 25;
constexpr double kBudgetSeconds = 60.0;
const std::vector<std::uint64_t> kSeeds = {0, 1, 2, 3, 4};

struct Outcome {
  bool pass = true;
  std::string detail;
  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

ScenarioConfig full_config(const std::string& preset, int seeds) {
  ScenarioConfig c;
  c.preset = preset;
  c.trials = kTrials;
  c.seeds = seeds;
  c.certify = true;
  c.springer = true;
  return c;
}

// Full-pipeline runs over seeds 0-4, shared by the catalog criteria.
const std::map<std::string, Analysis>& sweeps() {
  static const std::map<std::string, Analysis> runs = [] {
    std::map<std::string, Analysis> m;
    for (const auto& name : preset_names()) m.emplace(name, run_analysis(full_config(name, 5), Stage::Full));
    return m;
  }();
  return runs;
}

Outcome isotropy_suite() {
  Outcome o;
  std::ostringstream times;
  for (const auto& name : preset_names()) {
    const auto start = std::chrono::steady_clock::now();
    PairData pair = make_preset(name);
    auto h = kempf_candidates(pair, weight_table(pair, pair.k_perp));
    auto st = strata(pair, h);
    IsotropySweep r = verify_isotropy(pair, st, kTrials, kSeeds);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    char buf[64];
    std::snprintf(buf, sizeof buf, "%s %.2fs", name.c_str(), secs);
    times << (times.tellp() > 0 ? ", " : "") << buf;
    if (r.points != st.size() * kTrials * kSeeds.size()) o.fail(name + ": wrong number of sample points");
    if (!r.violations.empty()) {
      const auto& v = r.violations.front();
      o.fail(name + ": " + v.check + " violation at " + v.stratum_id + " seed " + std::to_string(v.seed) +
             " trial " + std::to_string(v.trial));
    }
    for (const auto& g : r.groups) {
      if (!g.isotropic) o.fail(name + " " + g.stratum_id + " " + g.orbit.label + " not isotropic");
      if (2 * g.dim_observed > g.orbit.dim) o.fail(name + " " + g.stratum_id + " " + g.orbit.label + " exceeds dim/2");
    }
    if (secs >= kBudgetSeconds) o.fail(name + " took " + buf);
  }
  if (o.pass) o.detail = times.str();
  return o;
}

Outcome sl2_torus_catalog() {
  Outcome o;
  const Analysis& a = sweeps().at("sl2-torus");
  std::size_t nonzero = 0;
  bool trivial = false;
  for (const auto& e : a.catalog) {
    if (e.trivial) {
      trivial = true;
      continue;
    }
    ++nonzero;
    if (e.orbit.label != "(2)" || e.orbit.dim != 2) o.fail("unexpected orbit " + e.orbit.label);
    if (e.dim_observed != 1) o.fail(e.stratum_id + " dim_observed " + std::to_string(e.dim_observed));
    if (!e.lagrangian) o.fail(e.stratum_id + " not Lagrangian");
  }
  if (nonzero != 2) o.fail(std::to_string(nonzero) + " nonzero entries");
  if (!trivial) o.fail("no trivial entry");
  const std::string golden = read_file(std::string(NULLSTRATA_GOLDEN_DIR) + "/sl2-torus.json");
  const std::string first = report_text(run_analysis(full_config("sl2-torus", 1), Stage::Full));
  if (first != golden) o.fail("report differs from the golden file");
  if (o.pass) o.detail = "2 x (2) dim 1/1 Lagrangian + trivial; golden report matches";
  return o;
}

Outcome diagonal_catalog() {
  Outcome o;
  const Analysis& a = sweeps().at("sl2xsl2-diagonal");
  bool found = false;
  for (const auto& e : a.catalog) {
    if (e.orbit.label == "((2),(2))") {
      found = true;
      if (e.dim_observed != 2 || e.orbit.dim != 4) o.fail(e.stratum_id + " dims " + std::to_string(e.dim_observed));
      if (!e.lagrangian) o.fail(e.stratum_id + " not Lagrangian");
    }
    if (e.orbit.label == "((2),(1,1))" || e.orbit.label == "((1,1),(2))") o.fail("sampled " + e.orbit.label);
  }
  if (!found) o.fail("no ((2),(2)) entry");
  if (o.pass) o.detail = "((2),(2)) dim 2 = 4/2 Lagrangian; mixed orbits unsampled";
  return o;
}

Outcome kempf_sets() {
  Outcome o;
  auto check = [&](const std::string& name, const std::vector<Element>& expected) {
    PairData p = make_preset(name);
    auto w = weight_table(p, p.k_perp);
    CandidateSet fast = kempf_candidates(p, w), ref = kempf_candidates_serial(p, w);
    std::set<Element> got, serial, want(expected.begin(), expected.end());
    for (const auto& c : fast.entries) got.insert(c.h);
    for (const auto& c : ref.entries) serial.insert(c.h);
    if (got != want) o.fail(name + ": H differs from the expected set");
    if (serial != want) o.fail(name + ": serial route differs from the expected set");
    for (const auto& c : fast.entries) {
      mpz_class gcd = 0;
      for (const auto& x : c.coords) {
        if (x.get_den() != 1) o.fail(name + ": non-integer coordinates");
        mpz_gcd(gcd.get_mpz_t(), gcd.get_mpz_t(), x.get_num_mpz_t());
      }
      if (gcd != 1) o.fail(name + ": coordinates not primitive");
    }
  };
  LieAlgebra s2 = LieAlgebra::sl(2), s3 = LieAlgebra::sl(3);
  check("sl2-torus", {parse_element(s2, "h"), parse_element(s2, "-h")});
  check("sl3-principal-sl2", {parse_element(s3, "2*h1 + 2*h2"), parse_element(s3, "-2*h1 - 2*h2")});
  if (o.pass) o.detail = "{h, -h} and {diag(2,0,-2), -diag(2,0,-2)}, fast = serial";
  return o;
}

Outcome orbit_dimensions() {
  Outcome o;
  int count = 0;
  for (std::size_t n = 2; n <= 4; ++n) {
    LieAlgebra g = LieAlgebra::sl(n);
    for (const auto& p : partitions(static_cast<int>(n))) {
      Element x = orbit_representative(g, {p});
      const int by_centralizer = static_cast<int>(g.dim()) - centralizer_dim(g, x);
      int sum = 0;
      for (int c : transpose(p)) sum += c * c;
      const int oracle = static_cast<int>(n * n) - sum;
      if (by_centralizer != oracle) o.fail("sl(" + std::to_string(n) + ") " + format_partition(p));
      if (oracle % 2 != 0) o.fail(format_partition(p) + " has odd dimension");
      ++count;
    }
  }
  if (o.pass) o.detail = std::to_string(count) + " partitions, n = 2..4, all even";
  return o;
}

Outcome springer_identity() {
  Outcome o;
  struct Case {
    std::size_t n;
    Partition p;
    int fiber;
  };
  const std::vector<Case> cases = {{2, {2}, 0}, {2, {1, 1}, 1}, {3, {3}, 0}, {3, {2, 1}, 1}, {3, {1, 1, 1}, 3}};
  std::string dims;
  for (const auto& c : cases) {
    SpringerReport r = springer_fiber(c.n, c.p);
    if (r.fiber_dim != c.fiber) o.fail(format_partition(c.p) + " fiber dim " + std::to_string(r.fiber_dim));
    if (r.orbit_dim / 2 + r.fiber_dim != static_cast<int>(flag_dim(c.n)) || !r.identity_check)
      o.fail(format_partition(c.p) + " identity");
    dims += (dims.empty() ? "" : ",") + std::to_string(r.fiber_dim);
  }
  if (o.pass) o.detail = "fiber dims " + dims;
  return o;
}

Outcome holonomicity() {
  Outcome o;
  std::size_t entries = 0;
  for (const auto& [name, a] : sweeps()) {
    if (!a.springer_ran) o.fail(name + ": bookkeeping did not run");
    for (const auto& e : a.catalog) {
      ++entries;
      if (!e.holonomic_dim_ok || !*e.holonomic_dim_ok) o.fail(name + " " + e.stratum_id + " " + e.orbit.label);
    }
  }
  if (o.pass) o.detail = std::to_string(entries) + " catalog entries";
  return o;
}

Outcome groebner_concordance() {
  Outcome o;
  std::size_t compared = 0;
  for (const auto& [name, a] : sweeps()) {
    for (std::size_t i = 0; i < a.stratum_closures.size(); ++i)
      if (a.stratum_closures[i].cap_exceeded) o.fail(name + " " + a.strata[i].id + ": CapExceeded");
    for (std::size_t i = 0; i < a.catalog.size(); ++i) {
      const auto& e = a.catalog[i];
      if (a.entry_closures[i].cap_exceeded) o.fail(name + " " + e.stratum_id + " " + e.orbit.label + ": CapExceeded");
      if (!e.dim_certified) {
        o.fail(name + " " + e.stratum_id + " " + e.orbit.label + ": not certified");
        continue;
      }
      ++compared;
      if (*e.dim_certified != e.dim_observed)
        o.fail(name + " " + e.stratum_id + " " + e.orbit.label + ": ideal dimension " +
               std::to_string(*e.dim_certified) + " vs observed " + std::to_string(e.dim_observed));
    }
    for (std::size_t s = 0; s < a.strata.size(); ++s) {
      int observed = -1;
      for (const auto& e : a.catalog)
        if (!e.trivial && e.stratum_index == s) observed = std::max(observed, e.dim_observed);
      ++compared;
      if (a.stratum_closures[s].dimension != observed)
        o.fail(name + " " + a.strata[s].id + ": closure dimension " + std::to_string(a.stratum_closures[s].dimension) +
               " vs observed " + std::to_string(observed));
    }
  }
  if (o.pass) o.detail = std::to_string(compared) + " comparisons at degree cap 8";
  return o;
}

Rat small_rat(std::mt19937_64& rng) {
  Rat c(static_cast<long>(rng() % 11) - 5, static_cast<long>(rng() % 3) + 1);
  c.canonicalize();
  return c;
}

Element random_in(const Subspace& s, std::mt19937_64& rng) {
  Element x = zero_vec(s.ambient_dim());
  for (std::size_t i = 0; i < s.dim(); ++i) axpy(small_rat(rng), s.basis().row(i), x);
  return x;
}

Outcome invariant_suite() {
  Outcome o;
  std::mt19937_64 rng(20261014);
  std::size_t jacobi = 0, killing = 0, shifts = 0, torus_points = 0, graded = 0;
  for (const auto& name : preset_names()) {
    PairData p = make_preset(name);
    const LieAlgebra& g = p.g;
    const std::size_t n = g.dim();
    const Subspace all = Subspace::full(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) {
          Element x = g.basis_element(i), y = g.basis_element(j), z = g.basis_element(k);
          Element s = add(add(g.bracket(x, g.bracket(y, z)), g.bracket(y, g.bracket(z, x))), g.bracket(z, g.bracket(x, y)));
          ++jacobi;
          if (!is_zero(s)) o.fail(name + ": Jacobi fails on a basis triple");
        }
    for (int t = 0; t < 50; ++t) {
      Element x = random_in(all, rng), y = random_in(all, rng), z = random_in(all, rng);
      ++killing;
      if (g.killing_form(g.bracket(x, y), z) != g.killing_form(x, g.bracket(y, z))) o.fail(name + ": kappa not invariant");
    }
    // omega is independent of the preimages: shift them by the stabilizer of xi.
    std::vector<Element> points;
    if (g.has_defining_rep())
      for (const auto& orbit : orbit_catalog(g))
        if (!is_zero(orbit.representative)) points.push_back(orbit.representative);
    auto h_set = kempf_candidates(p, weight_table(p, p.k_perp));
    auto st = strata(p, h_set);
    for (std::size_t s = 0; s < st.size(); ++s)
      for (std::size_t t = 0; t < 3; ++t) points.push_back(sample_stratum_point(p, st[s], 7, s, t).xi);
    for (const auto& xi : points) {
      if (is_zero(xi)) continue;
      Subspace tangent = orbit_tangent(g, xi);
      Subspace stab = Subspace::from_matrix_rows(kernel_basis(g.ad(xi)));
      for (int t = 0; t < 4; ++t) {
        Element u = random_in(tangent, rng), v = random_in(tangent, rng);
        Element a = tangent_preimage(g, xi, u), b = tangent_preimage(g, xi, v);
        Element a2 = add(a, random_in(stab, rng)), b2 = add(b, random_in(stab, rng));
        ++shifts;
        if (kirillov_form(g, xi, a, b) != kirillov_form(g, xi, a2, b2)) o.fail(name + ": omega depends on preimages");
        if (omega(g, xi, u, v) != kirillov_form(g, xi, a, b)) o.fail(name + ": omega differs from the form");
      }
    }
    // [g_a, g_b] inside g_{a+b} for every candidate h.
    for (const auto& c : h_set.entries) {
      GradingData gd = grade(g, all, c.h);
      for (const auto& la : gd.levels)
        for (const auto& lb : gd.levels) {
          Element x = random_in(la.space, rng), y = random_in(lb.space, rng);
          Element z = g.bracket(x, y);
          auto target = gd.level(la.eigenvalue + lb.eigenvalue);
          ++graded;
          if (target ? !target->contains(z) : !is_zero(z)) o.fail(name + ": grading not additive");
        }
    }
  }
  // Torus pairs: certificate search and the convex-hull LP decide the same membership.
  ScenarioConfig cartan;
  cartan.algebra = "sl(3)";
  cartan.subalgebra = "h1; h2";
  std::size_t null_points = 0;
  for (const PairData& p : {make_preset("sl2-torus"), resolve_pair(cartan)}) {
    NullconeContext ctx = nullcone_context(p);
    for (int t = 0; t < 100; ++t) {
      Element x = random_in(p.k_perp, rng);
      if (t % 4 == 0) {
        // Zero out a random coordinate subset so that both answers occur.
        for (auto& c : x)
          if (rng() % 2) c = 0;
      }
      Membership m = nullcone_membership(p, ctx, x, 64);
      const bool lp_null = !zero_in_convex_hull(weight_support(ctx.table, x)) || is_zero(x);
      ++torus_points;
      null_points += lp_null;
      if (m.kind == Membership::Kind::Unknown) o.fail("torus membership left undecided");
      if ((m.kind == Membership::Kind::Certified) != lp_null) o.fail("certificate and LP disagree");
    }
  }
  if (null_points == 0 || null_points == torus_points) o.fail("torus points did not exercise both answers");
  if (o.pass) {
    o.detail = std::to_string(jacobi) + " Jacobi triples, " + std::to_string(killing) + " kappa triples, " +
               std::to_string(shifts) + " omega shifts, " + std::to_string(torus_points) + " torus points (" +
               std::to_string(null_points) + " null), " +
               std::to_string(graded) + " graded brackets";
  }
  return o;
}

Outcome determinism() {
  Outcome o;
  for (const auto& name : preset_names()) {
    ScenarioConfig c = full_config(name, 1);
    const std::string a = report_text(run_analysis(c, Stage::Full));
    const std::string b = report_text(run_analysis(c, Stage::Full));
    if (a != b) o.fail(name + ": reports differ");
    if (a != read_file(std::string(NULLSTRATA_GOLDEN_DIR) + "/" + name + ".json")) o.fail(name + ": golden differs");
  }
  if (o.pass) o.detail = "5 presets, repeated runs and golden files byte-identical";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"isotropy of every sampled stratum point", isotropy_suite},
      {"sl2-torus Lagrangian catalog", sl2_torus_catalog},
      {"sl2+sl2 diagonal Lagrangian catalog", diagonal_catalog},
      {"Kempf candidate sets", kempf_sets},
      {"nilpotent orbit dimensions", orbit_dimensions},
      {"Springer dimension identity", springer_identity},
      {"holonomicity bookkeeping", holonomicity},
      {"Groebner concordance", groebner_concordance},
      {"algebra invariant suite", invariant_suite},
      {"determinism", determinism},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    if (!o.pass) ++failures;
    std::printf("criterion %2zu: %s  %s (%s)\n", i + 1, o.pass ? "PASS" : "FAIL", criteria[i].first.c_str(),
                o.detail.c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
