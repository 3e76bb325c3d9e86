#pragma once
// Weights of t_k, the destabilizing set H, the strata K (V_h^{>0}) and
// null-cone membership queries.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "nullstrata/pair.hpp"

namespace nullstrata {

// weight[j] is the eigenvalue of t_basis[j] on space.
struct WeightDatum {
  Vec weight;
  Subspace space;
};

struct Candidate {
  Element h;
  Vec coords;                     // primitive integer vector in t_basis coordinates
  std::vector<Vec> provenance;    // weight subset producing h
};

struct CandidateSet {
  std::vector<Candidate> entries;  // sorted by coords, decreasing
};

struct Stratum {
  std::string id;
  Element h;
  Subspace W;  // n_h ∩ k_perp
};

// Simultaneous eigenspaces of t_basis on a t_k-stable V, sorted by weight
// (lexicographically decreasing).
std::vector<WeightDatum> weight_table(const PairData& pair, const Subspace& v);

// Gram matrix κ(t_i, t_j) of the torus basis.
Matrix torus_gram(const PairData& pair);

// nullopt if gram is positive definite, otherwise a rational x (in the same
// coordinates) with x^T gram x <= 0.
std::optional<Vec> positive_definite_witness(const Matrix& gram);

// Minimal-norm points of the hulls of 0-free weight subsets, enumerated
// through the affinely independent faces carrying them. Parallel.
// Throws IndefiniteForm.
CandidateSet kempf_candidates(const PairData& pair, const std::vector<WeightDatum>& weights);

// Reference: every 0-free subset S of the weights, minimal-norm point of
// conv(S) taken over all faces of S. Serial, exponential in 3^|weights|.
CandidateSet kempf_candidates_serial(const PairData& pair, const std::vector<WeightDatum>& weights);

// One stratum per h with W = positive part of k_perp under h; W = 0 dropped.
std::vector<Stratum> strata(const PairData& pair, const CandidateSet& h_set);

// Exact LP: is 0 a convex combination of the points?
bool zero_in_convex_hull(const std::vector<Vec>& points);

// Weights whose component of x is nonzero.
std::vector<Vec> weight_support(const std::vector<WeightDatum>& table, const Element& x);

struct Membership {
  enum class Kind { Certified, ExactNo, Unknown };
  Kind kind = Kind::Unknown;
  std::optional<std::size_t> stratum;  // index into the strata list, Certified with x != 0
  Word word;                           // Ad(word)^{-1} x lies in W of the stratum
  std::size_t words_tried = 0;
};

// Context shared by repeated queries against the same pair.
struct NullconeContext {
  std::vector<WeightDatum> table;  // weights on k_perp
  CandidateSet h_set;
  std::vector<Stratum> strata;
};
NullconeContext nullcone_context(const PairData& pair);

// Certificate search over words of length <= kMaxWordLength, trying at most
// `budget` words. ExactNo only for torus pairs (no unipotent generators),
// decided by zero_in_convex_hull. Throws NotInKPerp.
Membership nullcone_membership(const PairData& pair, const NullconeContext& ctx, const Element& x,
                               std::size_t budget);
Membership nullcone_membership(const PairData& pair, const Element& x, std::size_t budget);
// One word at a time; same result as the batched search.
Membership nullcone_membership_serial(const PairData& pair, const NullconeContext& ctx, const Element& x,
                                      std::size_t budget);

std::string to_string(Membership::Kind k);

}  // namespace nullstrata
