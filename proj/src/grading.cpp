#include "nullstrata/grading.hpp"

#include <algorithm>

#include "nullstrata/errors.hpp"

namespace nullstrata {

Subspace GradingData::positive_part() const {
  Subspace out(space.ambient_dim());
  for (const auto& l : levels)
    if (sgn(l.eigenvalue) > 0) out = out.sum(l.space);
  return out;
}

Subspace GradingData::nonneg_part() const {
  Subspace out(space.ambient_dim());
  for (const auto& l : levels)
    if (sgn(l.eigenvalue) >= 0) out = out.sum(l.space);
  return out;
}

Subspace GradingData::negative_part() const {
  Subspace out(space.ambient_dim());
  for (const auto& l : levels)
    if (sgn(l.eigenvalue) < 0) out = out.sum(l.space);
  return out;
}

std::optional<Subspace> GradingData::level(const Rat& eigenvalue) const {
  for (const auto& l : levels)
    if (l.eigenvalue == eigenvalue) return l.space;
  return std::nullopt;
}

std::vector<Rat> characteristic_polynomial(const Matrix& a) {
  // Faddeev-LeVerrier.
  const std::size_t n = a.rows();
  std::vector<Rat> c(n + 1);
  c[n] = 1;
  Matrix m(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    m = a * m;
    for (std::size_t i = 0; i < n; ++i) m(i, i) += c[n - k + 1];
    c[n - k] = -(a * m).trace() / static_cast<long>(k);
  }
  return c;
}

namespace {

mpz_class eval_int(const std::vector<mpz_class>& p, const mpz_class& x) {
  mpz_class acc = 0;
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
  return acc;
}

// Divide p by (t - r), r an exact integer root.
std::vector<mpz_class> deflate(const std::vector<mpz_class>& p, const mpz_class& r) {
  std::vector<mpz_class> q(p.size() - 1);
  mpz_class carry = 0;
  for (std::size_t i = p.size(); i-- > 1;) {
    carry = carry * r + p[i];
    q[i - 1] = carry;
  }
  return q;
}

}  // namespace

std::vector<std::pair<Rat, int>> rational_roots(std::vector<Rat> p, const mpz_class& root_bound) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
  std::vector<std::pair<Rat, int>> roots;
  if (p.size() <= 1) return roots;

  int zero_mult = 0;
  while (p.size() > 1 && sgn(p.front()) == 0) {
    p.erase(p.begin());
    ++zero_mult;
  }
  // Substitute t = s / L with L making the polynomial monic-integral in s:
  // roots of an integral monic polynomial that are rational are integers.
  const std::size_t deg = p.size() - 1;
  mpz_class den_lcm = 1;
  for (const auto& c : p) den_lcm = lcm(den_lcm, mpz_class(c.get_den()));
  std::vector<mpz_class> ip(p.size());
  for (std::size_t i = 0; i <= deg; ++i) ip[i] = mpz_class(p[i] * den_lcm);
  mpz_class lead = ip[deg];
  // q(s) = lead^{deg-1} p(s / lead) = sum ip[i] lead^{deg-1-i} s^i for i < deg, s^deg.
  std::vector<mpz_class> q(deg + 1);
  q[deg] = 1;
  mpz_class pw = 1;
  for (std::size_t i = deg; i-- > 0;) {
    q[i] = ip[i] * pw;
    pw *= lead;
  }
  // Cauchy bound on integer roots of q.
  mpz_class bound = 0;
  for (std::size_t i = 0; i < deg; ++i) bound = std::max(bound, mpz_class(abs(q[i])));
  bound += 1;
  if (root_bound > 0) bound = std::min(bound, mpz_class(root_bound * lead));

  std::vector<std::pair<Rat, int>> found;
  auto try_root = [&](const mpz_class& r) {
    int mult = 0;
    while (q.size() > 1 && eval_int(q, r) == 0) {
      q = deflate(q, r);
      ++mult;
    }
    if (mult > 0) {
      Rat root(r, lead);
      root.canonicalize();
      found.emplace_back(root, mult);
    }
  };
  for (mpz_class r = 1; r <= bound && q.size() > 1; ++r) {
    if (q[0] % r != 0) continue;
    try_root(r);
    try_root(-r);
  }
  if (zero_mult > 0) found.emplace_back(Rat(0), zero_mult);
  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
  return found;
}

Matrix restricted_ad(const LieAlgebra& g, const Subspace& v, const Element& h) {
  const std::size_t d = v.dim();
  Matrix a(d, d);
  for (std::size_t j = 0; j < d; ++j) {
    Element image = g.bracket(h, v.basis_vector(j));
    auto coords = v.coordinates(image);
    if (!coords) {
      throw Error(ErrorKind::NotStable, "[" + g.format(h) + ", " + g.format(v.basis_vector(j)) +
                                            "] leaves the subspace");
    }
    for (std::size_t i = 0; i < d; ++i) a(i, j) = (*coords)[i];
  }
  return a;
}

namespace {

GradingData grade_with_status(const LieAlgebra& g, const Subspace& v, const Element& h,
                              SemisimpleStatus& status) {
  status = SemisimpleStatus::Ok;
  GradingData out{h, v, {}};
  if (v.dim() == 0) return out;
  Matrix a = restricted_ad(g, v, h);
  // Work with the integral matrix s*a: its rational eigenvalues are integers
  // bounded by the largest absolute row sum.
  mpz_class s = 1;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) s = lcm(s, mpz_class(a(i, j).get_den()));
  Matrix scaled = matrix_scale(Rat(s), a);
  mpz_class gershgorin = 0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    mpz_class row = 0;
    for (std::size_t j = 0; j < a.cols(); ++j) row += abs(scaled(i, j).get_num());
    gershgorin = std::max(gershgorin, row);
  }
  auto roots = rational_roots(characteristic_polynomial(scaled), gershgorin);
  for (auto& [r, mult] : roots) r /= s;
  std::size_t algebraic = 0, geometric = 0;
  for (const auto& [r, mult] : roots) {
    algebraic += static_cast<std::size_t>(mult);
    Matrix shifted = a;
    for (std::size_t i = 0; i < a.rows(); ++i) shifted(i, i) -= r;
    Matrix ker = kernel_basis(shifted);
    std::vector<Vec> vecs;
    for (std::size_t k = 0; k < ker.rows(); ++k) {
      Vec x(g.dim());
      for (std::size_t i = 0; i < v.dim(); ++i) axpy(ker(k, i), v.basis().row(i), x);
      vecs.push_back(std::move(x));
    }
    geometric += vecs.size();
    out.levels.push_back({r, Subspace::span(g.dim(), vecs)});
  }
  if (algebraic < v.dim()) status = SemisimpleStatus::Irrational;
  else if (geometric < v.dim()) status = SemisimpleStatus::NotSemisimple;
  return out;
}

}  // namespace

GradingData grade(const LieAlgebra& g, const Subspace& v, const Element& h) {
  if (h.size() != g.dim()) throw Error(ErrorKind::DimensionMismatch, "grading element has wrong length");
  if (is_zero(h)) throw Error(ErrorKind::ZeroElement, "grading requires a nonzero element");
  SemisimpleStatus status;
  GradingData out = grade_with_status(g, v, h, status);
  if (status == SemisimpleStatus::Irrational) {
    throw Error(ErrorKind::NotSemisimpleOrIrrational,
                "ad(" + g.format(h) + ") has an irrational eigenvalue on the subspace");
  }
  if (status == SemisimpleStatus::NotSemisimple) {
    throw Error(ErrorKind::NotSemisimpleOrIrrational,
                "ad(" + g.format(h) + ") is not semisimple (minimal polynomial has a square factor)");
  }
  return out;
}

SemisimpleStatus semisimple_status(const LieAlgebra& g, const Element& h) {
  if (is_zero(h)) return SemisimpleStatus::Zero;
  SemisimpleStatus status;
  grade_with_status(g, Subspace::full(g.dim()), h, status);
  return status;
}

Subspace nilradical(const LieAlgebra& g, const Element& h) {
  return grade(g, Subspace::full(g.dim()), h).positive_part();
}

bool is_ad_nilpotent(const LieAlgebra& g, const Element& x) {
  Matrix a = g.ad(x);
  Matrix p = a;
  for (std::size_t k = 1; k < g.dim(); ++k) p = p * a;
  return p.is_zero();
}

}  // namespace nullstrata
