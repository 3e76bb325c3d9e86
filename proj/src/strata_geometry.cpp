#include "nullstrata/strata_geometry.hpp"

#include <exception>
#include <map>
#include <random>

#include "nullstrata/errors.hpp"
#include "nullstrata/grading.hpp"

namespace nullstrata {

SamplePoint sample_stratum_point(const PairData& pair, const Stratum& stratum, std::uint64_t seed,
                                 std::size_t stratum_index, std::size_t trial) {
  if (stratum.W.dim() == 0) throw Error(ErrorKind::DegenerateStratumSample, "stratum " + stratum.id + " has W = 0");
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stratum_index), static_cast<std::uint32_t>(trial)};
  std::mt19937_64 rng(seq);
  // Modular reduction instead of std distributions keeps the stream portable.
  auto coefficient = [&] {
    long num = static_cast<long>(rng() % (2 * kSampleNumeratorBound + 1)) - kSampleNumeratorBound;
    long den = static_cast<long>(rng() % 3) + 1;
    Rat c(num, den);
    c.canonicalize();
    return c;
  };
  SamplePoint sp;
  for (int attempt = 0;; ++attempt) {
    if (attempt == kSampleMaxRedraws) {
      throw Error(ErrorKind::DegenerateStratumSample, "stratum " + stratum.id + ": every draw of w was zero");
    }
    sp.w = pair.g.zero();
    for (std::size_t i = 0; i < stratum.W.dim(); ++i) axpy(coefficient(), stratum.W.basis().row(i), sp.w);
    if (!is_zero(sp.w)) break;
  }
  const std::size_t gens = pair.unipotent_gens.size();
  if (gens > 0) {
    const std::size_t len = rng() % (kMaxWordLength + 1);
    const auto& params = sampling_parameters();
    for (std::size_t i = 0; i < len; ++i) {
      std::size_t gen = rng() % gens;
      sp.word.push_back({gen, params[rng() % params.size()]});
    }
  }
  sp.xi = apply_word(pair, sp.word, sp.w);
  if (pair.g.has_defining_rep()) sp.orbit = jordan_type(pair.g, sp.xi);
  return sp;
}

StratumTangent stratum_tangent(const PairData& pair, const Stratum& stratum, const SamplePoint& sp) {
  std::vector<Vec> vecs;
  for (const auto& x : pair.k.basis_vectors()) vecs.push_back(pair.g.bracket(x, sp.xi));
  for (const auto& w : stratum.W.basis_vectors()) vecs.push_back(apply_word(pair, sp.word, w));
  StratumTangent t;
  t.tangent = Subspace::span(pair.g.dim(), vecs);
  t.orbit = orbit_tangent(pair.g, sp.xi);
  t.in_orbit = t.tangent.intersect(t.orbit);
  return t;
}

namespace {

struct PointResult {
  bool grouped = false;
  OrbitKey key;
  int dim_in_orbit = 0;
  bool isotropic = true;
  std::vector<PointViolation> violations;
};

OrbitKey orbit_key(const PairData& pair, const std::vector<OrbitType>& catalog, const SamplePoint& sp,
                   const StratumTangent& t) {
  OrbitKey key;
  key.dim = static_cast<int>(t.orbit.dim());
  if (sp.orbit) {
    key.partition = sp.orbit;
    key.label = format_orbit(*sp.orbit);
    for (std::size_t i = 0; i < catalog.size(); ++i)
      if (catalog[i].partition == *sp.orbit) key.rank = static_cast<long>(i);
  } else {
    key.label = "unclassified(dim " + std::to_string(key.dim) + ")";
    key.rank = -key.dim;
  }
  (void)pair;
  return key;
}

PointResult evaluate_point(const PairData& pair, const std::vector<Stratum>& strata,
                           const std::vector<OrbitType>& catalog, std::uint64_t seed, std::size_t s,
                           std::size_t trial) {
  PointResult res;
  const Stratum& st = strata[s];
  SamplePoint sp = sample_stratum_point(pair, st, seed, s, trial);
  auto violation = [&](const std::string& check) {
    PointViolation v;
    v.check = check;
    v.stratum_id = st.id;
    v.seed = seed;
    v.trial = trial;
    v.point = sp;
    return v;
  };
  if (!pair.k_perp.contains(sp.xi)) res.violations.push_back(violation("k_perp"));
  if (!is_ad_nilpotent(pair.g, sp.xi)) res.violations.push_back(violation("nilpotent"));
  if (apply_word_inverse(pair, sp.word, sp.xi) != sp.w) res.violations.push_back(violation("reproduction"));
  if (pair.g.has_defining_rep() && !sp.orbit) return res;
  StratumTangent t = stratum_tangent(pair, st, sp);
  IsotropyReport iso = isotropy_report(pair.g, sp.xi, t.in_orbit);
  if (!iso.isotropic) {
    PointViolation v = violation("isotropy");
    v.isotropy = iso;
    res.violations.push_back(std::move(v));
  }
  res.grouped = true;
  res.key = orbit_key(pair, catalog, sp, t);
  res.dim_in_orbit = static_cast<int>(t.in_orbit.dim());
  res.isotropic = iso.isotropic;
  return res;
}

IsotropySweep merge(const std::vector<Stratum>& strata, const std::vector<std::uint64_t>& seeds, int trials,
                     std::vector<PointResult>& results) {
  IsotropySweep out;
  std::map<std::pair<std::size_t, long>, OrbitGroup> groups;
  std::size_t idx = 0;
  for (std::size_t si = 0; si < seeds.size(); ++si)
    for (std::size_t s = 0; s < strata.size(); ++s)
      for (int t = 0; t < trials; ++t, ++idx) {
        PointResult& r = results[idx];
        ++out.points;
        for (auto& v : r.violations) out.violations.push_back(std::move(v));
        if (!r.grouped) continue;
        auto [it, fresh] = groups.try_emplace({s, r.key.rank});
        OrbitGroup& g = it->second;
        if (fresh) {
          g.stratum_index = s;
          g.stratum_id = strata[s].id;
          g.orbit = r.key;
        }
        g.dim_observed = std::max(g.dim_observed, r.dim_in_orbit);
        ++g.samples;
        g.isotropic = g.isotropic && r.isotropic;
      }
  for (auto& [key, g] : groups) {
    g.dim_bound_ok = 2 * g.dim_observed <= g.orbit.dim;
    g.lagrangian = g.isotropic && 2 * g.dim_observed == g.orbit.dim;
    out.groups.push_back(std::move(g));
  }
  return out;
}

std::vector<OrbitType> catalog_if_any(const PairData& pair) {
  if (!pair.g.has_defining_rep()) return {};
  return orbit_catalog(pair.g);
}

}  // namespace

IsotropySweep verify_isotropy(const PairData& pair, const std::vector<Stratum>& strata, int trials,
                               const std::vector<std::uint64_t>& seeds) {
  if (trials < 0) throw Error(ErrorKind::PreconditionViolated, "trials must be nonnegative");
  const auto catalog = catalog_if_any(pair);
  const std::size_t per_seed = strata.size() * static_cast<std::size_t>(trials);
  const std::size_t total = seeds.size() * per_seed;
  std::vector<PointResult> results(total);
  std::vector<std::exception_ptr> errors(total);
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < static_cast<long>(total); ++i) {
    const std::size_t n = static_cast<std::size_t>(i);
    const std::size_t si = n / per_seed, s = (n % per_seed) / static_cast<std::size_t>(trials),
                      t = n % static_cast<std::size_t>(trials);
    try {
      results[n] = evaluate_point(pair, strata, catalog, seeds[si], s, t);
    } catch (...) {
      errors[n] = std::current_exception();
    }
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return merge(strata, seeds, trials, results);
}

IsotropySweep verify_isotropy_serial(const PairData& pair, const std::vector<Stratum>& strata, int trials,
                                      const std::vector<std::uint64_t>& seeds) {
  if (trials < 0) throw Error(ErrorKind::PreconditionViolated, "trials must be nonnegative");
  const auto catalog = catalog_if_any(pair);
  std::vector<PointResult> results;
  for (auto seed : seeds)
    for (std::size_t s = 0; s < strata.size(); ++s)
      for (int t = 0; t < trials; ++t)
        results.push_back(evaluate_point(pair, strata, catalog, seed, s, static_cast<std::size_t>(t)));
  return merge(strata, seeds, trials, results);
}

void require_no_violation(const PairData& pair, const IsotropySweep& result) {
  if (result.violations.empty()) return;
  const auto& v = result.violations.front();
  std::string msg = v.check + " check failed at stratum " + v.stratum_id + ", seed " + std::to_string(v.seed) +
                    ", trial " + std::to_string(v.trial) + ": xi = " + pair.g.format(v.point.xi) +
                    ", word = " + format_word(pair, v.point.word);
  if (v.check == "isotropy") {
    msg += ", omega(" + pair.g.format(v.isotropy.u) + ", " + pair.g.format(v.isotropy.v) +
           ") = " + format_rat(v.isotropy.value);
  }
  throw Error(ErrorKind::TheoremViolationWitness, msg);
}

std::vector<CatalogEntry> assemble_catalog(const PairData& pair, const IsotropySweep& result) {
  std::vector<CatalogEntry> out;
  for (const auto& g : result.groups) {
    CatalogEntry e;
    e.orbit = g.orbit;
    e.stratum_id = g.stratum_id;
    e.stratum_index = g.stratum_index;
    e.dim_observed = g.dim_observed;
    e.isotropic = g.isotropic;
    e.lagrangian = g.lagrangian;
    e.samples_used = g.samples;
    out.push_back(std::move(e));
  }
  CatalogEntry zero;
  zero.trivial = true;
  zero.stratum_id = "0";
  zero.lagrangian = true;
  if (pair.g.has_defining_rep()) {
    zero.orbit.partition = zero_orbit(pair.g);
    zero.orbit.label = format_orbit(*zero.orbit.partition);
    zero.orbit.rank = static_cast<long>(orbit_catalog(pair.g).size()) - 1;
  } else {
    zero.orbit.label = "zero";
  }
  out.push_back(std::move(zero));
  return out;
}

NullSubvarietyResult null_subvariety_check(const PairData& pair, const CandidateSet& h_set, const Subspace& v) {
  if (!pair.k_perp.contains(v)) throw Error(ErrorKind::NotInKPerp, "subspace is not inside k_perp");
  NullSubvarietyResult out;
  if (v.dim() == 0) {
    out.all_null = true;
    return out;
  }
  std::size_t best_count = 0;
  std::optional<Element> best_fail;
  for (const auto& c : h_set.entries) {
    Subspace pos = grade(pair.g, pair.k_perp, c.h).positive_part();
    std::size_t count = 0;
    std::optional<Element> fail;
    for (const auto& b : v.basis_vectors()) {
      if (pos.contains(b)) ++count;
      else if (!fail) fail = b;
    }
    if (!fail) {
      out.all_null = true;
      out.h = c.h;
      return out;
    }
    if (!best_fail || count > best_count) {
      best_count = count;
      best_fail = fail;
    }
  }
  out.failing = best_fail ? *best_fail : v.basis_vector(0);
  return out;
}

}  // namespace nullstrata
