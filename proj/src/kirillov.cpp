#include "nullstrata/kirillov.hpp"

#include "nullstrata/errors.hpp"

namespace nullstrata {

Rat kirillov_form(const LieAlgebra& g, const Element& xi, const Element& a, const Element& b) {
  return g.killing_form(xi, g.bracket(a, b));
}

namespace {

// Columns [x_j, xi].
Matrix coadjoint_map(const LieAlgebra& g, const Element& xi) { return matrix_scale(-1, g.ad(xi)); }

}  // namespace

Subspace orbit_tangent(const LieAlgebra& g, const Element& xi) {
  if (xi.size() != g.dim()) throw Error(ErrorKind::DimensionMismatch, "point has wrong length");
  if (is_zero(xi)) throw Error(ErrorKind::PreconditionViolated, "orbit_tangent needs a nonzero point");
  return Subspace::from_matrix_rows(g.ad(xi).transpose());
}

Element tangent_preimage(const LieAlgebra& g, const Element& xi, const Element& u) {
  auto sol = solve_linear(coadjoint_map(g, xi), u);
  if (!sol) {
    throw Error(ErrorKind::TangentNotInOrbit, g.format(u) + " is not tangent to the orbit of " + g.format(xi));
  }
  return sol->particular;
}

TangentFrame tangent_frame(const LieAlgebra& g, const Element& xi, const Subspace& t) {
  if (t.ambient_dim() != g.dim()) throw Error(ErrorKind::DimensionMismatch, "tangent subspace has wrong ambient");
  TangentFrame f{xi, t, {}};
  if (t.dim() == 0) return f;
  Matrix map = coadjoint_map(g, xi);
  for (const auto& u : t.basis_vectors()) {
    auto sol = solve_linear(map, u);
    if (!sol) {
      throw Error(ErrorKind::TangentNotInOrbit, g.format(u) + " is not tangent to the orbit of " + g.format(xi));
    }
    f.preimages.push_back(std::move(sol->particular));
  }
  return f;
}

Rat omega(const LieAlgebra& g, const Element& xi, const Element& u, const Element& v) {
  return kirillov_form(g, xi, tangent_preimage(g, xi, u), tangent_preimage(g, xi, v));
}

Subspace omega_orthogonal(const LieAlgebra& g, const Element& xi, const Subspace& t) {
  Subspace o = orbit_tangent(g, xi);
  TangentFrame of = tangent_frame(g, xi, o);
  TangentFrame tf = tangent_frame(g, xi, t);
  // y in coordinates of the orbit basis with sum_i y_i omega(o_i, t_k) = 0 for all k.
  Matrix m(t.dim(), o.dim());
  for (std::size_t k = 0; k < t.dim(); ++k)
    for (std::size_t i = 0; i < o.dim(); ++i) m(k, i) = kirillov_form(g, xi, of.preimages[i], tf.preimages[k]);
  Matrix ker = kernel_basis(m);
  std::vector<Vec> vecs;
  for (std::size_t r = 0; r < ker.rows(); ++r) {
    Vec x(g.dim());
    for (std::size_t i = 0; i < o.dim(); ++i) axpy(ker(r, i), o.basis().row(i), x);
    vecs.push_back(std::move(x));
  }
  return Subspace::span(g.dim(), vecs);
}

IsotropyReport isotropy_report(const LieAlgebra& g, const Element& xi, const Subspace& t) {
  IsotropyReport rep;
  TangentFrame f = tangent_frame(g, xi, t);
  for (std::size_t i = 0; i < t.dim(); ++i)
    for (std::size_t j = i + 1; j < t.dim(); ++j) {
      Rat w = kirillov_form(g, xi, f.preimages[i], f.preimages[j]);
      if (sgn(w) != 0) {
        rep.isotropic = false;
        rep.u = t.basis_vector(i);
        rep.v = t.basis_vector(j);
        rep.value = w;
        return rep;
      }
    }
  return rep;
}

CoisotropyReport coisotropy_report(const LieAlgebra& g, const Element& xi, const Subspace& t) {
  CoisotropyReport rep;
  for (const auto& v : omega_orthogonal(g, xi, t).basis_vectors())
    if (!t.contains(v)) {
      rep.coisotropic = false;
      rep.witness = v;
      break;
    }
  return rep;
}

LagrangianReport lagrangian_report(const LieAlgebra& g, const Element& xi, const Subspace& t) {
  LagrangianReport rep;
  rep.isotropy = isotropy_report(g, xi, t);
  rep.coisotropy = coisotropy_report(g, xi, t);
  rep.half_dimension = 2 * t.dim() == orbit_tangent(g, xi).dim();
  rep.lagrangian = rep.isotropy.isotropic && rep.half_dimension;
  return rep;
}

}  // namespace nullstrata
