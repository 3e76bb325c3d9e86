#pragma once
// Eigenspace decompositions under a rational semisimple element h.

#include <optional>
#include <utility>
#include <vector>

#include "nullstrata/lie.hpp"
#include "nullstrata/qlinalg.hpp"

namespace nullstrata {

struct GradeLevel {
  Rat eigenvalue;
  Subspace space;
};

struct GradingData {
  Element h;
  Subspace space;
  std::vector<GradeLevel> levels;  // strictly decreasing eigenvalues

  // Direct sum of the eigenspaces with eigenvalue > 0 (V_h^{>0}).
  Subspace positive_part() const;
  // Eigenvalue >= 0 (g_h^{>=0} when space = g).
  Subspace nonneg_part() const;
  Subspace negative_part() const;
  std::optional<Subspace> level(const Rat& eigenvalue) const;
};

// Characteristic polynomial det(t I - a), coefficients from t^0 upwards.
std::vector<Rat> characteristic_polynomial(const Matrix& a);

// Rational roots of p (coefficients from t^0) with multiplicities, sorted
// decreasingly. A positive root_bound limits the search to |root| <= bound.
std::vector<std::pair<Rat, int>> rational_roots(std::vector<Rat> p, const mpz_class& root_bound = 0);

// Matrix of the operator x -> [h, x] on V in the echelon basis of V.
// Throws NotStable when ad(h) V is not contained in V.
Matrix restricted_ad(const LieAlgebra& g, const Subspace& v, const Element& h);

// Throws ZeroElement, NotStable or NotSemisimpleOrIrrational.
GradingData grade(const LieAlgebra& g, const Subspace& v, const Element& h);

enum class SemisimpleStatus { Ok, Zero, Irrational, NotSemisimple };

// Classifies ad(h) on all of g: diagonalizable over Q, irrational spectrum,
// or not semisimple.
SemisimpleStatus semisimple_status(const LieAlgebra& g, const Element& h);

// n_h: the strictly positive part of grade(g, g, h).
Subspace nilradical(const LieAlgebra& g, const Element& h);

// true iff ad(x) is nilpotent on g.
bool is_ad_nilpotent(const LieAlgebra& g, const Element& x);

}  // namespace nullstrata
