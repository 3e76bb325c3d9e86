#pragma once
// Sampled points of K (n_h ∩ k_perp), their tangent spaces inside the
// nilpotent orbits, the pointwise isotropy verification and the catalog of
// (stratum, orbit) loci.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nullstrata/instability.hpp"
#include "nullstrata/kirillov.hpp"
#include "nullstrata/orbits.hpp"

namespace nullstrata {

struct SamplePoint {
  Element xi;  // Ad(word) w
  Word word;
  Element w;
  std::optional<PartitionTuple> orbit;  // nullopt without a defining representation
};

constexpr int kSampleNumeratorBound = 9;
constexpr int kSampleMaxRedraws = 64;

// Deterministic in (seed, stratum_index, trial). Throws
// DegenerateStratumSample when W = 0.
SamplePoint sample_stratum_point(const PairData& pair, const Stratum& stratum, std::uint64_t seed,
                                 std::size_t stratum_index = 0, std::size_t trial = 0);

struct StratumTangent {
  Subspace tangent;   // [k, xi] + Ad(word) W
  Subspace orbit;     // [g, xi]
  Subspace in_orbit;  // tangent ∩ orbit
};

StratumTangent stratum_tangent(const PairData& pair, const Stratum& stratum, const SamplePoint& sp);

// Orbit of a sampled point, as a label plus its dimension. Without a
// defining representation the label is "unclassified(dim d)".
struct OrbitKey {
  std::optional<PartitionTuple> partition;
  std::string label;
  int dim = 0;
  long rank = 0;  // position in the catalog, for ordering
};

struct OrbitGroup {
  std::size_t stratum_index = 0;
  std::string stratum_id;
  OrbitKey orbit;
  int dim_observed = 0;  // max dim(tangent ∩ orbit) over the group
  int samples = 0;
  bool isotropic = true;
  bool lagrangian = false;   // isotropic and dim_observed = dim / 2
  bool dim_bound_ok = true;  // 2 dim_observed <= dim
};

struct PointViolation {
  std::string check;  // isotropy, k_perp, nilpotent, reproduction
  std::string stratum_id;
  std::uint64_t seed = 0;
  std::size_t trial = 0;
  SamplePoint point;
  IsotropyReport isotropy;
};

struct IsotropySweep {
  std::vector<OrbitGroup> groups;  // ordered by (stratum, orbit catalog position)
  std::vector<PointViolation> violations;
  std::size_t points = 0;
};

// Samples `trials` points per (seed, stratum) and checks, for each point:
// xi in k_perp, xi ad-nilpotent, xi = Ad(word) w, and T ∩ [g, xi] isotropic.
// OpenMP over (seed, stratum, trial) with a deterministic merge.
IsotropySweep verify_isotropy(const PairData& pair, const std::vector<Stratum>& strata, int trials,
                               const std::vector<std::uint64_t>& seeds);
IsotropySweep verify_isotropy_serial(const PairData& pair, const std::vector<Stratum>& strata, int trials,
                                      const std::vector<std::uint64_t>& seeds);

// Throws TheoremViolationWitness describing the first violation, if any.
void require_no_violation(const PairData& pair, const IsotropySweep& result);

struct CatalogEntry {
  OrbitKey orbit;
  std::string stratum_id;  // "0" for the trivial entry
  std::size_t stratum_index = 0;
  int dim_observed = 0;
  std::optional<int> dim_certified;
  bool isotropic = true;
  bool lagrangian = false;
  std::optional<bool> holonomic_dim_ok;
  int samples_used = 0;
  bool trivial = false;
};

// One entry per observed (stratum, orbit) group, then the zero orbit.
std::vector<CatalogEntry> assemble_catalog(const PairData& pair, const IsotropySweep& result);

struct NullSubvarietyResult {
  bool all_null = false;
  std::optional<Element> h;  // the single h with V inside V_h^{>0}
  Element failing;           // CounterCandidate: basis vector outside the best V_h^{>0}
};

NullSubvarietyResult null_subvariety_check(const PairData& pair, const CandidateSet& h_set, const Subspace& v);

}  // namespace nullstrata
