#include "nullstrata/springer.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>

#include "nullstrata/errors.hpp"

namespace nullstrata {

namespace {

void require_rank(std::size_t n) {
  if (n < 2 || n > 3) throw Error(ErrorKind::UnsupportedRank, "flag varieties only for n = 2, 3");
}

std::vector<std::size_t> reduced_word(Permutation w) {
  // Bubble sort records adjacent transpositions; reversed they give w.
  std::vector<std::size_t> word;
  for (bool swapped = true; swapped;) {
    swapped = false;
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
      if (w[i] > w[i + 1]) {
        std::swap(w[i], w[i + 1]);
        word.push_back(i + 1);
        swapped = true;
      }
  }
  std::reverse(word.begin(), word.end());
  return word;
}

}  // namespace

Matrix Cell::point(std::span<const Rat> params) const {
  const std::size_t n = permutation.size();
  if (params.size() != dim) throw Error(ErrorKind::DimensionMismatch, "wrong number of cell parameters");
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = pattern[i][j] < 0 ? params[param_index[i][j]] : Rat(pattern[i][j]);
  return m;
}

std::size_t flag_dim(std::size_t n) { return n * (n - 1) / 2; }

std::vector<Cell> flag_cells(std::size_t n) {
  require_rank(n);
  Permutation w(n);
  for (std::size_t i = 0; i < n; ++i) w[i] = i;
  std::vector<Cell> cells;
  do {
    Cell c;
    c.permutation = w;
    c.simple_word = reduced_word(w);
    c.pattern.assign(n, std::vector<int>(n, 0));
    c.param_index.assign(n, std::vector<int>(n, -1));
    std::vector<bool> used(n, false);
    for (std::size_t j = 0; j < n; ++j) {
      c.pattern[w[j]][j] = 1;
      for (std::size_t i = 0; i < w[j]; ++i)
        if (!used[i]) {
          c.pattern[i][j] = -1;
          c.param_index[i][j] = static_cast<int>(c.dim++);
        }
      used[w[j]] = true;
    }
    cells.push_back(std::move(c));
  } while (std::next_permutation(w.begin(), w.end()));
  return cells;
}

std::size_t bruhat_cell_of(const std::vector<Cell>& cells, const Matrix& flag) {
  const std::size_t n = flag.rows();
  if (rank(flag) != n) throw Error(ErrorKind::PreconditionViolated, "flag matrix is not invertible");
  // Each column is cleared in the pivot rows of the earlier ones (in order,
  // since column k vanishes in the pivot rows before it); its pivot is then
  // its lowest nonzero row.
  std::vector<Vec> cols;
  Permutation w;
  for (std::size_t j = 0; j < n; ++j) {
    Vec v = flag.col_vec(j);
    for (std::size_t k = 0; k < cols.size(); ++k) axpy(-v[w[k]], cols[k], v);
    std::size_t piv = n;
    for (std::size_t i = n; i-- > 0;)
      if (sgn(v[i]) != 0) {
        piv = i;
        break;
      }
    v = scale(1 / v[piv], v);
    cols.push_back(std::move(v));
    w.push_back(piv);
  }
  for (std::size_t c = 0; c < cells.size(); ++c)
    if (cells[c].permutation == w) return c;
  throw Error(ErrorKind::PreconditionViolated, "no Bruhat cell found");
}

bool moment_incidence(const Matrix& flag, const Matrix& xi) {
  const std::size_t n = flag.rows();
  std::vector<Vec> prefix;
  for (std::size_t i = 0; i < n; ++i) {
    Vec image = xi.apply(flag.col_vec(i));
    if (!Subspace::span(n, prefix).contains(image)) return false;
    prefix.push_back(flag.col_vec(i));
  }
  return true;
}

std::vector<Polynomial> moment_incidence(const PolyRing& ring, const Cell& cell, const Matrix& xi) {
  const std::size_t n = cell.permutation.size();
  // Columns of the cell matrix as polynomial vectors.
  std::vector<std::vector<Polynomial>> col(n, std::vector<Polynomial>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      col[j][i] = cell.pattern[i][j] < 0 ? poly_var(ring, static_cast<std::size_t>(cell.param_index[i][j]))
                                         : poly_constant(ring, cell.pattern[i][j]);
  std::vector<Polynomial> out;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Polynomial> image(n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (sgn(xi(a, b)) != 0) image[a] = poly_add(ring, image[a], poly_scale(col[i][b], xi(a, b)));
    // rank [v_1 .. v_{i-1} | xi v_i] <= i - 1 via all i x i minors (i+1 columns counted 1-based)
    const std::size_t k = i + 1;
    std::vector<std::vector<Polynomial>> mat(n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t c = 0; c < i; ++c) mat[a].push_back(col[c][a]);
      mat[a].push_back(image[a]);
    }
    std::vector<std::size_t> rows;
    std::function<void(std::size_t)> rec = [&](std::size_t start) {
      if (rows.size() == k) {
        std::vector<std::vector<Polynomial>> sub;
        for (auto r : rows) sub.push_back(mat[r]);
        Polynomial d = poly_det(ring, sub);
        if (!d.is_zero()) out.push_back(std::move(d));
        return;
      }
      for (std::size_t r = start; r < n; ++r) {
        rows.push_back(r);
        rec(r + 1);
        rows.pop_back();
      }
    };
    rec(0);
  }
  return out;
}

SpringerReport springer_fiber(std::size_t n, const Partition& p, int degree_cap) {
  require_rank(n);
  int total = 0;
  for (int part : p) total += part;
  if (total != static_cast<int>(n)) throw Error(ErrorKind::DimensionMismatch, "partition of the wrong size");
  SpringerReport rep;
  rep.partition = p;
  const Matrix xi = jordan_matrix(p);
  const auto cells = flag_cells(n);
  rep.per_cell_dims.assign(cells.size(), -1);
  std::vector<std::optional<CapExceeded>> caps(cells.size());
#pragma omp parallel for schedule(dynamic)
  for (long c = 0; c < static_cast<long>(cells.size()); ++c) {
    const Cell& cell = cells[c];
    std::vector<std::string> names;
    for (std::size_t i = 0; i < cell.dim; ++i) names.push_back("p" + std::to_string(i + 1));
    PolyRing ring(names);
    Ideal id{ring, moment_incidence(ring, cell, xi), std::nullopt};
    auto res = groebner_basis(id, degree_cap);
    if (auto* cap = std::get_if<CapExceeded>(&res)) caps[c] = *cap;
    else rep.per_cell_dims[c] = ideal_dimension(std::get<Ideal>(res));
  }
  for (const auto& cap : caps)
    if (cap) {
      throw Error(ErrorKind::CapExceeded, "Springer fiber needs degree " + std::to_string(cap->degree) +
                                              " above the cap " + std::to_string(cap->cap));
    }
  rep.fiber_dim = *std::max_element(rep.per_cell_dims.begin(), rep.per_cell_dims.end());
  rep.orbit_dim = orbit_dim_formula(p);
  for (const auto& o : orbit_catalog(LieAlgebra::sl(n)))
    if (o.partition.front() == p) rep.orbit_dim = o.dim_orbit;
  rep.identity_check = rep.orbit_dim / 2 + rep.fiber_dim == static_cast<int>(flag_dim(n));
  return rep;
}

bool holonomicity_check(CatalogEntry& entry, const LieAlgebra& g, int degree_cap) {
  if (!g.has_defining_rep() || !entry.orbit.partition) {
    throw Error(ErrorKind::UnsupportedRank, "holonomicity bookkeeping needs a type A catalog");
  }
  static std::mutex mu;
  static std::map<std::pair<std::size_t, Partition>, int> fiber_cache;
  int fiber = 0, dim_x = 0;
  for (std::size_t f = 0; f < g.factors().size(); ++f) {
    const std::size_t n = g.factors()[f].n;
    require_rank(n);
    const Partition& p = (*entry.orbit.partition)[f];
    int d;
    {
      std::lock_guard<std::mutex> lock(mu);
      auto it = fiber_cache.find({n, p});
      d = it == fiber_cache.end() ? -1 : it->second;
    }
    if (d < 0) {
      d = springer_fiber(n, p, degree_cap).fiber_dim;
      std::lock_guard<std::mutex> lock(mu);
      fiber_cache[{n, p}] = d;
    }
    fiber += d;
    dim_x += static_cast<int>(flag_dim(n));
  }
  const bool ok = entry.lagrangian && entry.dim_observed + fiber == dim_x;
  entry.holonomic_dim_ok = ok;
  return ok;
}

}  // namespace nullstrata
