#include "doctest.h"
#include "nullstrata/errors.hpp"
#include "nullstrata/springer.hpp"
#include "test_util.hpp"

using namespace nullstrata;

namespace {

std::size_t inversions(const Permutation& w) {
  std::size_t c = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j) c += w[i] > w[j];
  return c;
}

// Schubert conditions: dim(F_i ∩ E_j) = #{k <= i : w(k) <= j}, E_j = first j
// coordinate vectors.
bool schubert_member(const Permutation& w, const Matrix& flag) {
  const std::size_t n = w.size();
  for (std::size_t i = 1; i <= n; ++i) {
    std::vector<Vec> f;
    for (std::size_t k = 0; k < i; ++k) f.push_back(flag.col_vec(k));
    Subspace fi = Subspace::span(n, f);
    for (std::size_t j = 1; j <= n; ++j) {
      std::vector<Vec> e;
      for (std::size_t k = 0; k < j; ++k) e.push_back(unit_vec(n, k));
      std::size_t expect = 0;
      for (std::size_t k = 0; k < i; ++k) expect += w[k] + 1 <= j;
      if (fi.intersect(Subspace::span(n, e)).dim() != expect) return false;
    }
  }
  return true;
}

// dim B_e = n(p) = sum (i - 1) p_i for e of Jordan type p.
int oracle_fiber_dim(const Partition& p) {
  int d = 0;
  for (std::size_t i = 0; i < p.size(); ++i) d += static_cast<int>(i) * p[i];
  return d;
}

}  // namespace

TEST_CASE("flag cells") {
  auto c2 = flag_cells(2);
  REQUIRE(c2.size() == 2);
  CHECK(c2[0].dim == 0);
  CHECK(c2[1].dim == 1);
  auto c3 = flag_cells(3);
  REQUIRE(c3.size() == 6);
  std::vector<std::size_t> dims;
  for (const auto& c : c3) {
    dims.push_back(c.dim);
    CHECK(c.dim == inversions(c.permutation));
    CHECK(c.simple_word.size() == c.dim);
  }
  std::sort(dims.begin(), dims.end());
  CHECK(dims == std::vector<std::size_t>{0, 1, 1, 2, 2, 3});
  CHECK(flag_dim(2) == 1);
  CHECK(flag_dim(3) == 3);
  CHECK_THROWS_AS(flag_cells(4), Error);
}

TEST_CASE("property: Bruhat cells cover the flag variety disjointly") {
  for (std::size_t n : {2u, 3u}) {
    auto cells = flag_cells(n);
    testutil::RatGen gen(n);
    int tested = 0;
    while (tested < 50) {
      Matrix m(n, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = gen.raw() % 3 == 0 ? Rat(0) : gen.next(3);
      if (rank(m) != n) continue;
      ++tested;
      int hits = 0;
      for (const auto& c : cells) hits += schubert_member(c.permutation, m);
      CHECK(hits == 1);
      CHECK(schubert_member(cells[bruhat_cell_of(cells, m)].permutation, m));
    }
    // parametrized points land in their own cell
    for (std::size_t c = 0; c < cells.size(); ++c)
      for (int t = 0; t < 5; ++t) {
        Matrix pt = cells[c].point(gen.vec(cells[c].dim, 4));
        CHECK(bruhat_cell_of(cells, pt) == c);
        CHECK(schubert_member(cells[c].permutation, pt));
      }
  }
}

TEST_CASE("moment incidence") {
  Matrix e = jordan_matrix({2});
  Matrix std_flag = Matrix::identity(2);
  CHECK(moment_incidence(std_flag, e));
  Matrix swapped = Matrix::from_rows(2, {testutil::v({0, 1}), testutil::v({1, 0})});
  CHECK_FALSE(moment_incidence(swapped, e));
  CHECK(moment_incidence(swapped, Matrix(2, 2)));
  // polynomial conditions agree with the boolean test at random cell points
  testutil::RatGen gen(9);
  for (std::size_t n : {2u, 3u})
    for (const auto& p : partitions(static_cast<int>(n))) {
      Matrix xi = jordan_matrix(p);
      for (const auto& cell : flag_cells(n)) {
        std::vector<std::string> names;
        for (std::size_t i = 0; i < cell.dim; ++i) names.push_back("p" + std::to_string(i + 1));
        PolyRing ring(names);
        auto conds = moment_incidence(ring, cell, xi);
        for (int t = 0; t < 6; ++t) {
          Vec params(cell.dim);
          for (auto& x : params) x = gen.raw() % 2 ? Rat(0) : gen.next(2);
          bool poly_ok = true;
          for (const auto& q : conds) poly_ok = poly_ok && poly_eval(q, params) == 0;
          CHECK(poly_ok == moment_incidence(cell.point(params), xi));
        }
      }
    }
}

TEST_CASE("Springer fibers and the dimension identity") {
  struct Case {
    std::size_t n;
    Partition p;
    int fiber;
  };
  for (const auto& c : std::vector<Case>{{2, {2}, 0}, {2, {1, 1}, 1}, {3, {3}, 0}, {3, {2, 1}, 1}, {3, {1, 1, 1}, 3}}) {
    CAPTURE(format_partition(c.p));
    auto rep = springer_fiber(c.n, c.p);
    CHECK(rep.fiber_dim == c.fiber);
    CHECK(rep.fiber_dim == oracle_fiber_dim(c.p));
    CHECK(rep.identity_check);
    CHECK(rep.orbit_dim / 2 + rep.fiber_dim == static_cast<int>(flag_dim(c.n)));
  }
  CHECK_THROWS_AS(springer_fiber(4, {4}), Error);
}

TEST_CASE("property: fiber dimension is antitone in dominance order") {
  auto dominates = [](const Partition& a, const Partition& b) {
    int sa = 0, sb = 0;
    for (std::size_t i = 0; i < std::max(a.size(), b.size()); ++i) {
      sa += i < a.size() ? a[i] : 0;
      sb += i < b.size() ? b[i] : 0;
      if (sa < sb) return false;
    }
    return true;
  };
  for (std::size_t n : {2u, 3u}) {
    auto ps = partitions(static_cast<int>(n));
    for (const auto& a : ps)
      for (const auto& b : ps)
        if (dominates(b, a)) CHECK(springer_fiber(n, a).fiber_dim >= springer_fiber(n, b).fiber_dim);
  }
}

TEST_CASE("holonomicity bookkeeping") {
  LieAlgebra g = LieAlgebra::sl(2);
  CatalogEntry regular;
  regular.orbit.partition = PartitionTuple{{2}};
  regular.orbit.dim = 2;
  regular.dim_observed = 1;
  regular.lagrangian = true;
  CHECK(holonomicity_check(regular, g));
  CHECK(regular.holonomic_dim_ok == true);
  CatalogEntry zero;
  zero.orbit.partition = PartitionTuple{{1, 1}};
  zero.lagrangian = true;
  CHECK(holonomicity_check(zero, g));
  CatalogEntry bad = regular;
  bad.dim_observed = 0;
  bad.lagrangian = false;
  CHECK_FALSE(holonomicity_check(bad, g));
  CatalogEntry sum;
  sum.orbit.partition = PartitionTuple{{2}, {2}};
  sum.orbit.dim = 4;
  sum.dim_observed = 2;
  sum.lagrangian = true;
  CHECK(holonomicity_check(sum, builtin_algebra("sl(2)+sl(2)")));
  CatalogEntry big;
  big.orbit.partition = PartitionTuple{{4}};
  big.lagrangian = true;
  CHECK_THROWS_AS(holonomicity_check(big, LieAlgebra::sl(4)), Error);
}
