#pragma once
// The pair (g, k): k a subalgebra reductive in g, its annihilator k⊥ realized
// inside g through the Killing form, and the split data used for sampling.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "nullstrata/lie.hpp"

namespace nullstrata {

struct PairData {
  LieAlgebra g;
  Subspace k;
  std::vector<Element> t_basis;  // basis of the split Cartan t_k
  Subspace t_k;
  Subspace k_perp;
  // ad-nilpotent vectors of the echelon basis of k; K is sampled through
  // products of their exponentials.
  std::vector<Element> unipotent_gens;
  std::string name;  // preset name, empty for ad-hoc pairs
};

// k = bracket closure of the generators. Throws NotReductive, NoSplitCartan,
// IrrationalEigenvalues, NotClosedUnderBracket, DimensionMismatch.
PairData make_pair(const LieAlgebra& g, const std::vector<Element>& k_generators,
                   const std::optional<std::vector<Element>>& t_k_hint = std::nullopt);

// k_perp, re-verified against k.
const Subspace& annihilator(const PairData& pair);

// Bracket closure of a set of elements (canonical, order independent).
Subspace bracket_closure(const LieAlgebra& g, const std::vector<Element>& generators);

// Group elements of K are sampled as words exp(t_1 u_{i_1}) ... exp(t_m u_{i_m})
// in the unipotent generators, acting through Ad.
struct WordFactor {
  std::size_t gen;
  Rat t;
  bool operator==(const WordFactor&) const = default;
};
using Word = std::vector<WordFactor>;

// Parameters allowed in sampled words, in canonical order.
const std::array<Rat, 6>& sampling_parameters();
constexpr std::size_t kMaxWordLength = 3;

// Ad(word) x, the rightmost factor acting first.
Element apply_word(const PairData& pair, const Word& word, const Element& x);
Element apply_word_inverse(const PairData& pair, const Word& word, const Element& x);
std::string format_word(const PairData& pair, const Word& word);

// Preset pairs: sl2-torus, sl2-full, sl2xsl2-diagonal, sl3-principal-sl2,
// sl3-levi-gl2.
const std::vector<std::string>& preset_names();
PairData make_preset(const std::string& name);

}  // namespace nullstrata
