#include "nullstrata/instability.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "nullstrata/errors.hpp"
#include "nullstrata/grading.hpp"

namespace nullstrata {

std::vector<WeightDatum> weight_table(const PairData& pair, const Subspace& v) {
  std::vector<WeightDatum> pieces;
  if (v.dim() == 0) return pieces;
  pieces.push_back({{}, v});
  for (const auto& t : pair.t_basis) {
    std::vector<WeightDatum> next;
    for (const auto& piece : pieces) {
      for (const auto& level : grade(pair.g, piece.space, t).levels) {
        Vec w = piece.weight;
        w.push_back(level.eigenvalue);
        next.push_back({std::move(w), level.space});
      }
    }
    pieces = std::move(next);
  }
  std::sort(pieces.begin(), pieces.end(), [](const auto& a, const auto& b) { return a.weight > b.weight; });
  return pieces;
}

Matrix torus_gram(const PairData& pair) {
  const std::size_t r = pair.t_basis.size();
  Matrix gram(r, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) gram(i, j) = pair.g.killing_form(pair.t_basis[i], pair.t_basis[j]);
  return gram;
}

std::optional<Vec> positive_definite_witness(const Matrix& gram) {
  // Symmetric elimination: schur holds the remaining Schur complement, l the
  // unit lower triangular factor. At the first nonpositive pivot k,
  // x = L^{-T} e_k has x^T gram x = pivot.
  const std::size_t n = gram.rows();
  Matrix schur = gram;
  Matrix l = Matrix::identity(n);
  for (std::size_t k = 0; k < n; ++k) {
    const Rat d = schur(k, k);
    if (sgn(d) <= 0) {
      Vec x(n);
      x[k] = 1;
      for (std::size_t i = k; i-- > 0;) {
        Rat acc = 0;
        for (std::size_t j = i + 1; j <= k; ++j) acc += l(j, i) * x[j];
        x[i] = -acc;
      }
      return x;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      l(i, k) = schur(i, k) / d;
      for (std::size_t j = k + 1; j < n; ++j) schur(i, j) -= l(i, k) * schur(k, j);
    }
    for (std::size_t i = k + 1; i < n; ++i) schur(i, k) = schur(k, i) = 0;
  }
  return std::nullopt;
}

namespace {

struct Projection {
  bool independent = false;
  bool nonneg = false;   // all barycentric coordinates >= 0
  bool positive = false; // all barycentric coordinates > 0
  Vec p;
  Rat norm2;
};

Rat inner(const Matrix& m, const Vec& a, const Vec& b) { return dot(a, m.apply(b)); }

// Orthogonal projection of 0 onto the affine hull of the chosen points, under
// the inner product m.
Projection project_origin(const std::vector<Vec>& points, const std::vector<std::size_t>& idx, const Matrix& m) {
  Projection out;
  const Vec& base = points[idx[0]];
  const std::size_t s = idx.size() - 1;
  std::vector<Vec> diffs;
  for (std::size_t j = 1; j <= s; ++j) diffs.push_back(sub(points[idx[j]], base));
  Vec gamma;
  if (s > 0) {
    Matrix n(s, s);
    Vec rhs(s);
    for (std::size_t a = 0; a < s; ++a) {
      for (std::size_t b = 0; b < s; ++b) n(a, b) = inner(m, diffs[a], diffs[b]);
      rhs[a] = -inner(m, diffs[a], base);
    }
    auto inv = inverse(n);
    if (!inv) return out;
    gamma = inv->apply(rhs);
  }
  out.independent = true;
  out.p = base;
  Rat beta0 = 1;
  out.nonneg = out.positive = true;
  for (std::size_t j = 0; j < s; ++j) {
    axpy(gamma[j], diffs[j], out.p);
    beta0 -= gamma[j];
    if (sgn(gamma[j]) < 0) out.nonneg = false;
    if (sgn(gamma[j]) <= 0) out.positive = false;
  }
  if (sgn(beta0) < 0) out.nonneg = false;
  if (sgn(beta0) <= 0) out.positive = false;
  out.norm2 = inner(m, out.p, out.p);
  return out;
}

// All index subsets of {0..m-1} with sizes in [1, max_size], ordered by size
// then lexicographically.
std::vector<std::vector<std::size_t>> subsets_by_size(std::size_t m, std::size_t max_size) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t start, std::size_t size) {
    if (cur.size() == size) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = start; i + (size - cur.size()) <= m; ++i) {
      cur.push_back(i);
      rec(i + 1, size);
      cur.pop_back();
    }
  };
  for (std::size_t size = 1; size <= std::min(m, max_size); ++size) rec(0, size);
  return out;
}

struct Setup {
  std::vector<Vec> points;
  Matrix inv_gram;
};

Setup setup(const PairData& pair, const std::vector<WeightDatum>& weights) {
  Matrix gram = torus_gram(pair);
  if (auto w = positive_definite_witness(gram)) {
    Element x = pair.g.zero();
    for (std::size_t i = 0; i < w->size(); ++i) axpy((*w)[i], pair.t_basis[i], x);
    throw Error(ErrorKind::IndefiniteForm,
                "Killing form on t_k is not positive definite; witness " + pair.g.format(x));
  }
  Setup s{{}, *inverse(gram)};
  for (const auto& w : weights) {
    if (w.weight.size() != pair.t_basis.size()) {
      throw Error(ErrorKind::DimensionMismatch, "weight length differs from dim t_k");
    }
    s.points.push_back(w.weight);
  }
  return s;
}

Candidate make_candidate(const PairData& pair, const Setup& s, const Vec& p, const std::vector<std::size_t>& idx) {
  Candidate c;
  c.coords = primitive(s.inv_gram.apply(p));
  c.h = pair.g.zero();
  for (std::size_t i = 0; i < c.coords.size(); ++i) axpy(c.coords[i], pair.t_basis[i], c.h);
  for (auto i : idx) c.provenance.push_back(s.points[i]);
  return c;
}

CandidateSet merge_ordered(std::vector<std::optional<Candidate>>& found) {
  std::map<Vec, Candidate> unique;
  for (auto& c : found)
    if (c) unique.emplace(c->coords, std::move(*c));
  CandidateSet out;
  for (auto it = unique.rbegin(); it != unique.rend(); ++it) out.entries.push_back(std::move(it->second));
  return out;
}

}  // namespace

CandidateSet kempf_candidates(const PairData& pair, const std::vector<WeightDatum>& weights) {
  if (weights.empty()) return {};
  Setup s = setup(pair, weights);
  const auto faces = subsets_by_size(s.points.size(), pair.t_basis.size() + 1);
  std::vector<std::optional<Candidate>> found(faces.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < static_cast<long>(faces.size()); ++i) {
    Projection pr = project_origin(s.points, faces[i], s.inv_gram);
    if (pr.independent && pr.positive && sgn(pr.norm2) > 0) found[i] = make_candidate(pair, s, pr.p, faces[i]);
  }
  return merge_ordered(found);
}

CandidateSet kempf_candidates_serial(const PairData& pair, const std::vector<WeightDatum>& weights) {
  if (weights.empty()) return {};
  Setup s = setup(pair, weights);
  const std::size_t m = s.points.size();
  if (m > 16) throw Error(ErrorKind::PreconditionViolated, "serial Kempf reference limited to 16 weights");
  std::vector<std::optional<Projection>> memo(std::size_t{1} << m);
  auto projection = [&](std::size_t mask) -> const Projection& {
    if (!memo[mask]) {
      std::vector<std::size_t> idx;
      for (std::size_t i = 0; i < m; ++i)
        if (mask >> i & 1) idx.push_back(i);
      memo[mask] = project_origin(s.points, idx, s.inv_gram);
    }
    return *memo[mask];
  };
  auto subsets = subsets_by_size(m, m);
  std::vector<std::optional<Candidate>> found(subsets.size());
  for (std::size_t n = 0; n < subsets.size(); ++n) {
    std::size_t mask = 0;
    for (auto i : subsets[n]) mask |= std::size_t{1} << i;
    const Projection* best = nullptr;
    for (std::size_t sub = mask; sub; sub = (sub - 1) & mask) {
      const Projection& pr = projection(sub);
      if (!pr.independent || !pr.nonneg) continue;
      if (!best || pr.norm2 < best->norm2) best = &pr;
    }
    if (best && sgn(best->norm2) > 0) found[n] = make_candidate(pair, s, best->p, subsets[n]);
  }
  return merge_ordered(found);
}

std::vector<Stratum> strata(const PairData& pair, const CandidateSet& h_set) {
  std::vector<Stratum> out;
  if (pair.k_perp.dim() == 0) return out;
  for (const auto& c : h_set.entries) {
    Subspace w = grade(pair.g, pair.k_perp, c.h).positive_part();
    if (w.dim() == 0) continue;
    out.push_back({"S" + std::to_string(out.size() + 1), c.h, std::move(w)});
  }
  return out;
}

bool zero_in_convex_hull(const std::vector<Vec>& points) {
  if (points.empty()) return false;
  // Phase-one simplex with Bland's rule on
  //   sum_i beta_i a_i = 0, sum_i beta_i = 1, beta >= 0.
  const std::size_t m = points.size();
  const std::size_t r = points[0].size();
  const std::size_t rows = r + 1;
  const std::size_t cols = m + rows;  // structural then artificial
  Matrix t(rows + 1, cols + 1);       // last row: reduced costs, last column: rhs
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < m; ++j) t(i, j) = i < r ? points[j][i] : Rat(1);
    t(i, m + i) = 1;
  }
  t(r, cols) = 1;
  std::vector<std::size_t> basis(rows);
  for (std::size_t i = 0; i < rows; ++i) basis[i] = m + i;
  for (std::size_t j = 0; j <= cols; ++j) {
    if (j >= m && j < cols) continue;
    Rat acc = 0;
    for (std::size_t i = 0; i < rows; ++i) acc -= t(i, j);
    t(rows, j) = acc;
  }
  for (;;) {
    std::size_t enter = cols;
    for (std::size_t j = 0; j < cols; ++j)
      if (sgn(t(rows, j)) < 0) {
        enter = j;
        break;
      }
    if (enter == cols) break;
    std::size_t leave = rows;
    Rat best_ratio;
    for (std::size_t i = 0; i < rows; ++i) {
      if (sgn(t(i, enter)) <= 0) continue;
      Rat ratio = t(i, cols) / t(i, enter);
      if (leave == rows || ratio < best_ratio || (ratio == best_ratio && basis[i] < basis[leave])) {
        leave = i;
        best_ratio = ratio;
      }
    }
    if (leave == rows) break;  // unbounded cannot occur in phase one
    const Rat piv = t(leave, enter);
    for (std::size_t j = 0; j <= cols; ++j) t(leave, j) /= piv;
    for (std::size_t i = 0; i <= rows; ++i) {
      if (i == leave || sgn(t(i, enter)) == 0) continue;
      const Rat f = t(i, enter);
      for (std::size_t j = 0; j <= cols; ++j) t(i, j) -= f * t(leave, j);
    }
    basis[leave] = enter;
  }
  return sgn(t(rows, cols)) == 0;
}

std::vector<Vec> weight_support(const std::vector<WeightDatum>& table, const Element& x) {
  std::vector<Vec> columns;
  std::vector<std::size_t> owner;
  for (std::size_t w = 0; w < table.size(); ++w)
    for (const auto& b : table[w].space.basis_vectors()) {
      columns.push_back(b);
      owner.push_back(w);
    }
  std::vector<Vec> out;
  if (columns.empty()) {
    if (!is_zero(x)) throw Error(ErrorKind::PreconditionViolated, "weight_support: x outside the module");
    return out;
  }
  auto sol = solve_linear(Matrix::from_columns(x.size(), columns), x);
  if (!sol) throw Error(ErrorKind::PreconditionViolated, "weight_support: x outside the module");
  std::vector<bool> hit(table.size(), false);
  for (std::size_t i = 0; i < owner.size(); ++i)
    if (sgn(sol->particular[i]) != 0) hit[owner[i]] = true;
  for (std::size_t w = 0; w < table.size(); ++w)
    if (hit[w]) out.push_back(table[w].weight);
  return out;
}

NullconeContext nullcone_context(const PairData& pair) {
  NullconeContext ctx;
  ctx.table = weight_table(pair, pair.k_perp);
  ctx.h_set = kempf_candidates(pair, ctx.table);
  ctx.strata = strata(pair, ctx.h_set);
  return ctx;
}

namespace {

// The n-th word in canonical order: by length, then lexicographically in
// (generator, parameter index).
Word nth_word(std::size_t n, std::size_t gens) {
  const std::size_t letters = gens * sampling_parameters().size();
  if (n == 0) return {};
  --n;
  std::size_t len = 1, count = letters;
  while (n >= count) {
    n -= count;
    ++len;
    count *= letters;
  }
  Word w(len);
  for (std::size_t i = len; i-- > 0;) {
    std::size_t letter = n % letters;
    n /= letters;
    w[i] = {letter / sampling_parameters().size(), sampling_parameters()[letter % sampling_parameters().size()]};
  }
  return w;
}

std::size_t total_words(std::size_t gens) {
  const std::size_t letters = gens * sampling_parameters().size();
  std::size_t total = 1, pw = 1;
  for (std::size_t len = 1; len <= kMaxWordLength && letters > 0; ++len) {
    pw *= letters;
    total += pw;
  }
  return total;
}

}  // namespace

Membership nullcone_membership(const PairData& pair, const NullconeContext& ctx, const Element& x,
                               std::size_t budget) {
  if (x.size() != pair.g.dim()) throw Error(ErrorKind::DimensionMismatch, "element has wrong length");
  if (!pair.k_perp.contains(x)) throw Error(ErrorKind::NotInKPerp, pair.g.format(x) + " is not in k_perp");
  Membership out;
  if (is_zero(x)) {
    out.kind = Membership::Kind::Certified;
    return out;
  }
  const std::size_t gens = pair.unipotent_gens.size();
  const std::size_t limit = std::min(budget, total_words(gens));
  constexpr std::size_t kBatch = 256;
  for (std::size_t start = 0; start < limit; start += kBatch) {
    const std::size_t end = std::min(limit, start + kBatch);
    std::vector<long> hit(end - start, -1);
#pragma omp parallel for schedule(dynamic)
    for (long i = static_cast<long>(start); i < static_cast<long>(end); ++i) {
      Element y = apply_word_inverse(pair, nth_word(static_cast<std::size_t>(i), gens), x);
      for (std::size_t s = 0; s < ctx.strata.size(); ++s)
        if (ctx.strata[s].W.contains(y)) {
          hit[i - start] = static_cast<long>(s);
          break;
        }
    }
    for (std::size_t i = 0; i < hit.size(); ++i)
      if (hit[i] >= 0) {
        out.kind = Membership::Kind::Certified;
        out.stratum = static_cast<std::size_t>(hit[i]);
        out.word = nth_word(start + i, gens);
        out.words_tried = start + i + 1;
        return out;
      }
    out.words_tried = end;
  }
  if (gens == 0 && zero_in_convex_hull(weight_support(ctx.table, x))) out.kind = Membership::Kind::ExactNo;
  return out;
}

Membership nullcone_membership_serial(const PairData& pair, const NullconeContext& ctx, const Element& x,
                                      std::size_t budget) {
  if (x.size() != pair.g.dim()) throw Error(ErrorKind::DimensionMismatch, "element has wrong length");
  if (!pair.k_perp.contains(x)) throw Error(ErrorKind::NotInKPerp, pair.g.format(x) + " is not in k_perp");
  Membership out;
  if (is_zero(x)) {
    out.kind = Membership::Kind::Certified;
    return out;
  }
  const std::size_t gens = pair.unipotent_gens.size();
  const std::size_t limit = std::min(budget, total_words(gens));
  for (std::size_t i = 0; i < limit; ++i) {
    Word w = nth_word(i, gens);
    Element y = apply_word_inverse(pair, w, x);
    out.words_tried = i + 1;
    for (std::size_t s = 0; s < ctx.strata.size(); ++s)
      if (ctx.strata[s].W.contains(y)) {
        out.kind = Membership::Kind::Certified;
        out.stratum = s;
        out.word = std::move(w);
        return out;
      }
  }
  if (gens == 0 && zero_in_convex_hull(weight_support(ctx.table, x))) out.kind = Membership::Kind::ExactNo;
  return out;
}

Membership nullcone_membership(const PairData& pair, const Element& x, std::size_t budget) {
  return nullcone_membership(pair, nullcone_context(pair), x, budget);
}

std::string to_string(Membership::Kind k) {
  switch (k) {
    case Membership::Kind::Certified:
      return "Certified";
    case Membership::Kind::ExactNo:
      return "ExactNo";
    case Membership::Kind::Unknown:
      return "Unknown";
  }
  return "Unknown";
}

}  // namespace nullstrata
