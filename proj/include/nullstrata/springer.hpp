#pragma once
// Flag varieties of sl(2) and sl(3): Bruhat cells, the moment-map incidence
// xi F_i ⊆ F_{i-1}, Springer fiber dimensions and the holonomicity
// bookkeeping of catalog entries.

#include <optional>
#include <vector>

#include "nullstrata/groebner.hpp"
#include "nullstrata/strata_geometry.hpp"

namespace nullstrata {

using Permutation = std::vector<std::size_t>;  // 0-based image of each column

// Column j has a 1 in row w(j) and a free parameter in every row i < w(j)
// not taken by an earlier pivot; dimension = number of inversions.
struct Cell {
  Permutation permutation;
  std::vector<std::size_t> simple_word;  // reduced word in s_1 .. s_{n-1} (1-based)
  std::size_t dim = 0;
  // entries: -1 for a parameter slot, otherwise the constant 0 or 1;
  // param_index gives the parameter number of each slot.
  std::vector<std::vector<int>> pattern;
  std::vector<std::vector<int>> param_index;

  Matrix point(std::span<const Rat> params) const;
};

// n! cells, permutations in lexicographic order. Throws UnsupportedRank.
std::vector<Cell> flag_cells(std::size_t n);
std::size_t flag_dim(std::size_t n);

// Index into flag_cells(n) of the cell containing the flag spanned by the
// leading columns of an invertible matrix.
std::size_t bruhat_cell_of(const std::vector<Cell>& cells, const Matrix& flag);

// xi F_i ⊆ F_{i-1} for the flag of the columns of `flag`.
bool moment_incidence(const Matrix& flag, const Matrix& xi);

// Polynomial conditions on the cell parameters: for each i, the i x i
// minors of [v_1 .. v_{i-1} | xi v_i].
std::vector<Polynomial> moment_incidence(const PolyRing& ring, const Cell& cell, const Matrix& xi);

struct SpringerReport {
  Partition partition;
  int fiber_dim = -1;
  std::vector<int> per_cell_dims;  // -1 for an empty intersection
  int orbit_dim = 0;
  bool identity_check = false;  // dim O / 2 + fiber_dim = dim X
};

// Throws UnsupportedRank; CapExceeded becomes an Error of that kind.
SpringerReport springer_fiber(std::size_t n, const Partition& p, int degree_cap = 8);

// Lagrangian and dim_observed + sum of factor fiber dims = sum of dim X.
// Writes entry.holonomic_dim_ok. Throws UnsupportedRank for factors beyond
// sl(3) or algebras without a catalog.
bool holonomicity_check(CatalogEntry& entry, const LieAlgebra& g, int degree_cap = 8);

}  // namespace nullstrata
