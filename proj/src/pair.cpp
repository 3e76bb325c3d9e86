#include "nullstrata/pair.hpp"

#include "nullstrata/errors.hpp"
#include "nullstrata/grading.hpp"

namespace nullstrata {

Subspace bracket_closure(const LieAlgebra& g, const std::vector<Element>& generators) {
  for (const auto& x : generators) {
    if (x.size() != g.dim()) {
      throw Error(ErrorKind::DimensionMismatch, "generator has length " + std::to_string(x.size()) +
                                                    ", algebra has dimension " + std::to_string(g.dim()));
    }
  }
  Subspace s = Subspace::span(g.dim(), generators);
  for (std::size_t round = 0;; ++round) {
    if (round > g.dim()) {
      throw Error(ErrorKind::NotClosedUnderBracket, "closure did not stabilize within dim g rounds");
    }
    std::vector<Vec> extra;
    auto basis = s.basis_vectors();
    for (std::size_t i = 0; i < basis.size(); ++i)
      for (std::size_t j = i + 1; j < basis.size(); ++j) {
        Element b = g.bracket(basis[i], basis[j]);
        if (!s.contains(b)) extra.push_back(std::move(b));
      }
    if (extra.empty()) return s;
    s = s.sum(Subspace::span(g.dim(), extra));
  }
}

namespace {

Element combine(const LieAlgebra& g, const Subspace& space, std::span<const Rat> coords) {
  Element x(g.dim());
  for (std::size_t i = 0; i < coords.size(); ++i) axpy(coords[i], space.basis().row(i), x);
  return x;
}

bool commutes_with_all(const LieAlgebra& g, const Element& x, const std::vector<Element>& others) {
  for (const auto& y : others)
    if (!is_zero(g.bracket(x, y))) return false;
  return true;
}

}  // namespace

PairData make_pair(const LieAlgebra& g, const std::vector<Element>& k_generators,
                   const std::optional<std::vector<Element>>& t_k_hint) {
  PairData p{g, bracket_closure(g, k_generators), {}, Subspace(g.dim()), Subspace(g.dim()), {}, {}};

  const auto k_basis = p.k.basis_vectors();
  const std::size_t dk = k_basis.size();
  Matrix gram(dk, dk);
  for (std::size_t i = 0; i < dk; ++i)
    for (std::size_t j = 0; j < dk; ++j) gram(i, j) = g.killing_form(k_basis[i], k_basis[j]);
  Matrix ker = kernel_basis(gram);
  if (ker.rows() > 0) {
    throw Error(ErrorKind::NotReductive,
                "Killing form degenerate on k; kernel vector " + g.format(combine(g, p.k, ker.row(0))));
  }

  std::vector<Vec> pairings;
  for (const auto& b : k_basis) pairings.push_back(g.pairing(b));
  p.k_perp = Subspace::from_matrix_rows(kernel_basis(Matrix::from_rows(g.dim(), pairings)));

  if (t_k_hint && !t_k_hint->empty()) {
    for (const auto& t : *t_k_hint) {
      if (t.size() != g.dim()) throw Error(ErrorKind::DimensionMismatch, "torus hint has wrong length");
      if (!p.k.contains(t)) {
        throw Error(ErrorKind::PreconditionViolated, "torus hint " + g.format(t) + " is not in k");
      }
      auto status = semisimple_status(g, t);
      if (status != SemisimpleStatus::Ok) {
        throw Error(ErrorKind::IrrationalEigenvalues,
                    "torus hint " + g.format(t) + " is not ad-semisimple with rational eigenvalues");
      }
      if (!commutes_with_all(g, t, p.t_basis)) {
        throw Error(ErrorKind::PreconditionViolated, "torus hint elements do not commute");
      }
      if (Subspace::span(g.dim(), p.t_basis).contains(t)) {
        throw Error(ErrorKind::PreconditionViolated, "torus hint elements are linearly dependent");
      }
      p.t_basis.push_back(t);
    }
  } else {
    bool saw_irrational = false;
    for (const auto& b : k_basis) {
      auto status = semisimple_status(g, b);
      if (status == SemisimpleStatus::Irrational) saw_irrational = true;
      if (status != SemisimpleStatus::Ok) continue;
      if (!commutes_with_all(g, b, p.t_basis)) continue;
      p.t_basis.push_back(b);
    }
    if (p.t_basis.empty() && dk > 0) {
      if (saw_irrational) {
        throw Error(ErrorKind::IrrationalEigenvalues,
                    "k has no ad-semisimple basis element with rational eigenvalues (non-split torus?)");
      }
      throw Error(ErrorKind::NoSplitCartan, "no split Cartan found among the basis of k");
    }
  }
  p.t_k = Subspace::span(g.dim(), p.t_basis);

  for (const auto& b : k_basis)
    if (is_ad_nilpotent(g, b)) p.unipotent_gens.push_back(b);
  return p;
}

const Subspace& annihilator(const PairData& pair) {
  for (std::size_t i = 0; i < pair.k_perp.dim(); ++i)
    for (std::size_t j = 0; j < pair.k.dim(); ++j) {
      if (sgn(pair.g.killing_form(pair.k_perp.basis_vector(i), pair.k.basis_vector(j))) != 0) {
        throw Error(ErrorKind::PreconditionViolated, "k_perp is not Killing-orthogonal to k");
      }
    }
  return pair.k_perp;
}

const std::array<Rat, 6>& sampling_parameters() {
  static const std::array<Rat, 6> params = {Rat(-2), Rat(-1), Rat(-1, 2), Rat(1, 2), Rat(1), Rat(2)};
  return params;
}

Element apply_word(const PairData& pair, const Word& word, const Element& x) {
  Element y = x;
  for (std::size_t i = word.size(); i-- > 0;)
    y = pair.g.exp_ad(pair.unipotent_gens.at(word[i].gen), word[i].t, y);
  return y;
}

Element apply_word_inverse(const PairData& pair, const Word& word, const Element& x) {
  Element y = x;
  for (const auto& f : word) y = pair.g.exp_ad(pair.unipotent_gens.at(f.gen), -f.t, y);
  return y;
}

std::string format_word(const PairData& pair, const Word& word) {
  if (word.empty()) return "1";
  std::string out;
  for (const auto& f : word) {
    if (!out.empty()) out += " ";
    out += "exp(" + format_rat(f.t) + "*(" + pair.g.format(pair.unipotent_gens.at(f.gen)) + "))";
  }
  return out;
}

const std::vector<std::string>& preset_names() {
  static const std::vector<std::string> names = {"sl2-torus", "sl2-full", "sl2xsl2-diagonal",
                                                 "sl3-principal-sl2", "sl3-levi-gl2"};
  return names;
}

PairData make_preset(const std::string& name) {
  auto el = [](const LieAlgebra& g, std::initializer_list<std::pair<const char*, int>> terms) {
    Element x = g.zero();
    for (auto [label, c] : terms) x[g.index_of(label)] += c;
    return x;
  };
  auto named = [&name](PairData p) {
    p.name = name;
    return p;
  };
  if (name == "sl2-torus") {
    LieAlgebra g = LieAlgebra::sl(2);
    Element h = el(g, {{"h", 1}});
    return named(make_pair(g, {h}, std::vector<Element>{h}));
  } else if (name == "sl2-full") {
    LieAlgebra g = LieAlgebra::sl(2);
    Element h = el(g, {{"h", 1}});
    return named(make_pair(g, {el(g, {{"e", 1}}), h, el(g, {{"f", 1}})}, std::vector<Element>{h}));
  } else if (name == "sl2xsl2-diagonal") {
    LieAlgebra g = builtin_algebra("sl(2)+sl(2)");
    Element e = el(g, {{"e_1", 1}, {"e_2", 1}});
    Element h = el(g, {{"h_1", 1}, {"h_2", 1}});
    Element f = el(g, {{"f_1", 1}, {"f_2", 1}});
    return named(make_pair(g, {e, h, f}, std::vector<Element>{h}));
  } else if (name == "sl3-principal-sl2") {
    LieAlgebra g = LieAlgebra::sl(3);
    Element e = el(g, {{"e12", 1}, {"e23", 1}});
    Element h = el(g, {{"h1", 2}, {"h2", 2}});  // diag(2, 0, -2)
    Element f = el(g, {{"e21", 2}, {"e32", 2}});
    return named(make_pair(g, {e, h, f}, std::vector<Element>{h}));
  } else if (name == "sl3-levi-gl2") {
    LieAlgebra g = LieAlgebra::sl(3);
    Element h = el(g, {{"h1", 1}});
    Element center = el(g, {{"h1", 1}, {"h2", 2}});  // diag(1, 1, -2)
    return named(make_pair(g, {el(g, {{"e12", 1}}), h, el(g, {{"e21", 1}}), center},
                  std::vector<Element>{h, center}));
  }
  throw Error(ErrorKind::ConfigError, "unknown preset '" + name + "'");
}

}  // namespace nullstrata
