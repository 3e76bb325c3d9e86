#include "nullstrata/orbits.hpp"

#include <functional>

#include "nullstrata/errors.hpp"

namespace nullstrata {

std::vector<Partition> partitions(int n) {
  std::vector<Partition> out;
  Partition cur;
  std::function<void(int, int)> rec = [&](int left, int max_part) {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = std::min(left, max_part); p >= 1; --p) {
      cur.push_back(p);
      rec(left - p, p);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

Partition transpose(const Partition& p) {
  Partition t;
  if (p.empty()) return t;
  for (int k = 1; k <= p.front(); ++k) {
    int c = 0;
    for (int part : p) c += part >= k;
    t.push_back(c);
  }
  return t;
}

int orbit_dim_formula(const Partition& p) {
  int n = 0;
  for (int part : p) n += part;
  int s = 0;
  for (int c : transpose(p)) s += c * c;
  return n * n - s;
}

Matrix jordan_matrix(const Partition& p) {
  int n = 0;
  for (int part : p) n += part;
  Matrix m(n, n);
  int row = 0;
  for (int part : p) {
    for (int i = 0; i + 1 < part; ++i) m(row + i, row + i + 1) = 1;
    row += part;
  }
  return m;
}

namespace {

void require_type_a(const LieAlgebra& g) {
  if (!g.has_defining_rep() || g.factors().empty()) {
    throw Error(ErrorKind::UnsupportedType, "orbit data needs a builtin type A algebra");
  }
}

}  // namespace

Element orbit_representative(const LieAlgebra& g, const PartitionTuple& p) {
  require_type_a(g);
  if (p.size() != g.factors().size()) throw Error(ErrorKind::DimensionMismatch, "one partition per factor");
  Matrix m(g.rep_dim(), g.rep_dim());
  for (std::size_t f = 0; f < p.size(); ++f) {
    const auto& fac = g.factors()[f];
    Matrix j = jordan_matrix(p[f]);
    if (j.rows() != fac.n) throw Error(ErrorKind::DimensionMismatch, "partition size differs from factor rank");
    for (std::size_t a = 0; a < fac.n; ++a)
      for (std::size_t b = 0; b < fac.n; ++b) m(fac.rep_offset + a, fac.rep_offset + b) = j(a, b);
  }
  return g.from_matrix(m);
}

int centralizer_dim(const LieAlgebra& g, const Element& x) {
  return static_cast<int>(g.dim() - rank(g.ad(x)));
}

std::vector<OrbitType> orbit_catalog(const LieAlgebra& g) {
  require_type_a(g);
  std::vector<PartitionTuple> tuples = {{}};
  for (const auto& fac : g.factors()) {
    std::vector<PartitionTuple> next;
    for (const auto& t : tuples)
      for (const auto& p : partitions(static_cast<int>(fac.n))) {
        auto u = t;
        u.push_back(p);
        next.push_back(std::move(u));
      }
    tuples = std::move(next);
  }
  std::vector<OrbitType> out;
  for (auto& t : tuples) {
    OrbitType o{t, orbit_representative(g, t), 0};
    o.dim_orbit = static_cast<int>(g.dim()) - centralizer_dim(g, o.representative);
    int formula = 0;
    for (const auto& p : t) formula += orbit_dim_formula(p);
    if (formula != o.dim_orbit) {
      throw Error(ErrorKind::PreconditionViolated,
                  "centralizer dimension disagrees with the partition formula for " + format_orbit(t));
    }
    out.push_back(std::move(o));
  }
  return out;
}

Matrix factor_block(const LieAlgebra& g, const Element& x, std::size_t f) {
  require_type_a(g);
  Matrix full = g.to_matrix(x);
  const auto& fac = g.factors().at(f);
  Matrix m(fac.n, fac.n);
  for (std::size_t a = 0; a < fac.n; ++a)
    for (std::size_t b = 0; b < fac.n; ++b) m(a, b) = full(fac.rep_offset + a, fac.rep_offset + b);
  return m;
}

std::optional<PartitionTuple> jordan_type(const LieAlgebra& g, const Element& x) {
  require_type_a(g);
  PartitionTuple out;
  for (std::size_t f = 0; f < g.factors().size(); ++f) {
    Matrix m = factor_block(g, x, f);
    const std::size_t n = m.rows();
    // ranks[k] = rank(M^k); the number of blocks of size >= k is ranks[k-1] - ranks[k].
    std::vector<std::size_t> ranks = {n};
    Matrix pw = Matrix::identity(n);
    for (std::size_t k = 1; k <= n; ++k) {
      pw = pw * m;
      ranks.push_back(rank(pw));
    }
    if (ranks[n] != 0) return std::nullopt;
    Partition t;
    for (std::size_t k = 1; k <= n; ++k)
      if (ranks[k - 1] > ranks[k]) t.push_back(static_cast<int>(ranks[k - 1] - ranks[k]));
    out.push_back(transpose(t));
  }
  return out;
}

PartitionTuple zero_orbit(const LieAlgebra& g) {
  require_type_a(g);
  PartitionTuple out;
  for (const auto& fac : g.factors()) out.push_back(Partition(fac.n, 1));
  return out;
}

std::string format_partition(const Partition& p) {
  std::string out = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(p[i]);
  }
  return out + ")";
}

std::string format_orbit(const PartitionTuple& p) {
  if (p.size() == 1) return format_partition(p[0]);
  std::string out = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += ",";
    out += format_partition(p[i]);
  }
  return out + ")";
}

}  // namespace nullstrata
