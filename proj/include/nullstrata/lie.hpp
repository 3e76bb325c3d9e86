#pragma once
// Split semisimple Lie algebras given by rational structure constants.
//
// g* is never represented separately: functionals are turned into elements
// through the Killing form (dualize).

#include <cstddef>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "nullstrata/qlinalg.hpp"

namespace nullstrata {

// Coordinates in the basis of a LieAlgebra.
using Element = Vec;

// One sl(n) summand of a builtin algebra: its basis block and the block of
// the (block-diagonal) defining representation it acts on.
struct SlFactor {
  std::size_t n = 0;
  std::size_t basis_offset = 0;
  std::size_t basis_dim = 0;
  std::size_t rep_offset = 0;
};

class LieAlgebra {
 public:
  // sl(n), 2 <= n <= 4. Basis: positive root vectors e_ij ordered by height,
  // then the simple coroots h_i = e_ii - e_{i+1,i+1}, then the negatives in
  // mirrored order. For n = 2 the basis is (e, h, f).
  static LieAlgebra sl(std::size_t n);
  static LieAlgebra direct_sum(const std::vector<LieAlgebra>& summands);
  // Dense table c[i][j][k] with [x_i, x_j] = sum_k c[i][j][k] x_k. Validates
  // antisymmetry, Jacobi and nondegeneracy of the Killing form.
  static LieAlgebra from_table(std::vector<std::string> labels,
                               const std::vector<std::vector<Vec>>& table);

  std::size_t dim() const noexcept { return labels_.size(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::size_t index_of(const std::string& label) const;
  Element basis_element(std::size_t i) const { return unit_vec(dim(), i); }
  Element zero() const { return zero_vec(dim()); }

  Rat structure_constant(std::size_t i, std::size_t j, std::size_t k) const;
  Element bracket(const Element& x, const Element& y) const;
  // Matrix of ad(x): column j is [x, x_j].
  Matrix ad(const Element& x) const;

  const Matrix& killing_matrix() const noexcept { return killing_; }
  Rat killing_form(const Element& x, const Element& y) const;
  // The unique z with killing_form(z, .) = xi (xi given by its values on the basis).
  Element dualize(const Vec& functional) const;
  // killing_form(x, .) as a functional.
  Vec pairing(const Element& x) const;

  bool has_defining_rep() const noexcept { return !rep_.empty(); }
  std::size_t rep_dim() const noexcept { return rep_dim_; }
  const std::vector<Matrix>& defining_rep() const noexcept { return rep_; }
  const std::vector<SlFactor>& factors() const noexcept { return factors_; }
  Matrix to_matrix(const Element& x) const;
  Element from_matrix(const Matrix& m) const;

  // exp(t ad u) x for ad-nilpotent u; throws PreconditionViolated otherwise.
  Element exp_ad(const Element& u, const Rat& t, const Element& x) const;

  std::string format(const Element& x) const;

 private:
  LieAlgebra() = default;
  void build_sparse(const std::vector<std::vector<Vec>>& table);
  void validate() const;
  void compute_killing();

  std::vector<std::string> labels_;
  // sparse_[i * dim + j] = nonzero (k, c[i][j][k]).
  std::vector<std::vector<std::pair<std::size_t, Rat>>> sparse_;
  Matrix killing_;
  std::vector<Matrix> rep_;
  std::size_t rep_dim_ = 0;
  std::vector<SlFactor> factors_;
};

// Plain-text structure constants: lines `i j k c` (0-based indices, c as p/q)
// meaning c[i][j][k] = c; `#` starts a comment; optional `dim N` and
// `labels a b c ...` lines. An entry also fixes c[j][i][k] = -c unless that
// entry is given explicitly.
LieAlgebra parse_structure_constants(std::istream& in);
void write_structure_constants(std::ostream& out, const LieAlgebra& g);

// "sl(3)", "sl(2)+sl(2)", ...; throws ParseError on anything else.
LieAlgebra builtin_algebra(const std::string& name);
bool is_builtin_name(const std::string& name);

// Linear combination of basis labels, e.g. "e12 + 2*e23 - 1/2*h1" (the
// inverse of LieAlgebra::format). Throws ParseError.
Element parse_element(const LieAlgebra& g, const std::string& text);

}  // namespace nullstrata
