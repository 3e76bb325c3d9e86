#pragma once
// The Kirillov form on coadjoint orbits, transported to g by the Killing form:
// omega_xi([a, xi], [b, xi]) = kappa(xi, [a, b]).

#include <optional>
#include <vector>

#include "nullstrata/lie.hpp"

namespace nullstrata {

struct TangentFrame {
  Element point;
  Subspace vectors;                // inside [g, point]
  std::vector<Element> preimages;  // [preimages[i], point] = vectors.basis_vector(i)
};

Rat kirillov_form(const LieAlgebra& g, const Element& xi, const Element& a, const Element& b);

// [g, xi]. Throws PreconditionViolated for xi = 0.
Subspace orbit_tangent(const LieAlgebra& g, const Element& xi);

// Some a with [a, xi] = u, the particular solution of the linear system.
// Throws TangentNotInOrbit.
Element tangent_preimage(const LieAlgebra& g, const Element& xi, const Element& u);

// Throws TangentNotInOrbit when T is not inside [g, xi].
TangentFrame tangent_frame(const LieAlgebra& g, const Element& xi, const Subspace& t);

// omega(u, v) for tangent vectors u, v in [g, xi].
Rat omega(const LieAlgebra& g, const Element& xi, const Element& u, const Element& v);

// {v in [g, xi] : omega(v, T) = 0}.
Subspace omega_orthogonal(const LieAlgebra& g, const Element& xi, const Subspace& t);

struct IsotropyReport {
  bool isotropic = true;
  // First basis pair (i < j) of T with omega != 0.
  Element u, v;
  Rat value;
};

struct CoisotropyReport {
  bool coisotropic = true;
  Element witness;  // in T^omega but not in T
};

struct LagrangianReport {
  IsotropyReport isotropy;
  CoisotropyReport coisotropy;
  bool half_dimension = false;
  bool lagrangian = false;  // isotropic and dim T = dim orbit / 2
};

IsotropyReport isotropy_report(const LieAlgebra& g, const Element& xi, const Subspace& t);
CoisotropyReport coisotropy_report(const LieAlgebra& g, const Element& xi, const Subspace& t);
LagrangianReport lagrangian_report(const LieAlgebra& g, const Element& xi, const Subspace& t);

}  // namespace nullstrata
