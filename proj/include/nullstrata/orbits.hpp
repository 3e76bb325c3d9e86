#pragma once
// Nilpotent orbits of type A algebras, classified by Jordan type in the
// defining representation.

#include <optional>
#include <string>
#include <vector>

#include "nullstrata/lie.hpp"

namespace nullstrata {

using Partition = std::vector<int>;           // weakly decreasing, positive
using PartitionTuple = std::vector<Partition>;  // one partition per sl factor

struct OrbitType {
  PartitionTuple partition;
  Element representative;  // Jordan-block nilpotent
  int dim_orbit = 0;
};

// Partitions of n, lexicographically decreasing: (n) first, (1^n) last.
std::vector<Partition> partitions(int n);
Partition transpose(const Partition& p);

// n^2 - sum (p^t_i)^2.
int orbit_dim_formula(const Partition& p);

// Block-diagonal Jordan matrix with nilpotent blocks of the given sizes.
Matrix jordan_matrix(const Partition& p);

// Product of the factor catalogs, in lexicographic order of the factor
// tuples. Throws UnsupportedType without a defining representation.
std::vector<OrbitType> orbit_catalog(const LieAlgebra& g);

Element orbit_representative(const LieAlgebra& g, const PartitionTuple& p);
int centralizer_dim(const LieAlgebra& g, const Element& x);

// nullopt when some factor block is not nilpotent. Throws UnsupportedType.
std::optional<PartitionTuple> jordan_type(const LieAlgebra& g, const Element& x);

// Matrix of the factor block of x for factor f.
Matrix factor_block(const LieAlgebra& g, const Element& x, std::size_t f);

// The zero orbit: (1^n) in every factor.
PartitionTuple zero_orbit(const LieAlgebra& g);

// "(2,1)" for one factor, "((2),(1,1))" for sums.
std::string format_partition(const Partition& p);
std::string format_orbit(const PartitionTuple& p);

}  // namespace nullstrata
