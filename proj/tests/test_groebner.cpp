#include <sstream>

#include "doctest.h"
#include "nullstrata/errors.hpp"
#include "nullstrata/groebner.hpp"
#include "test_util.hpp"

using namespace nullstrata;
using testutil::r;

namespace {

Ideal gb_of(const PolyRing& ring, const std::vector<std::string>& gens, int cap = 8) {
  Ideal id{ring, {}, std::nullopt};
  for (const auto& s : gens) id.generators.push_back(parse_polynomial(ring, s));
  auto res = groebner_basis(id, cap);
  REQUIRE(std::holds_alternative<Ideal>(res));
  return std::get<Ideal>(res);
}

std::vector<std::string> printed(const Ideal& id) {
  std::vector<std::string> out;
  for (const auto& p : *id.gb) out.push_back(format_polynomial(id.ring, p));
  return out;
}

bool in_ideal(const Ideal& id, const Polynomial& p) { return normal_form(id.ring, p, *id.gb).is_zero(); }

}  // namespace

TEST_CASE("monomial order is degrevlex") {
  PolyRing ring({"x", "y", "z"});
  auto p = parse_polynomial(ring, "z^2 + x*z + y^2 + x*y + x^2 + x^3");
  CHECK(format_polynomial(ring, p) == "x^3 + x^2 + x*y + y^2 + x*z + z^2");
  CHECK(format_polynomial(ring, parse_polynomial(ring, "-3/2*x^2*y + 1/3 - y")) == "-3/2*x^2*y - y + 1/3");
}

TEST_CASE("Groebner basis examples") {
  PolyRing x1({"x"});
  CHECK(printed(gb_of(x1, {"x"})) == std::vector<std::string>{"x"});
  PolyRing xy({"x", "y"});
  CHECK(printed(gb_of(xy, {"x^2", "x*y"})) == std::vector<std::string>{"x^2", "x*y"});
  auto e = gb_of(xy, {"x^2 - y", "y^2 - x"});
  CHECK(in_ideal(e, parse_polynomial(xy, "x^4 - x")));
  // lex-free oracle: substitution y = x^2 turns y^2 - x into x^4 - x
  PolyRing lex({"y", "x"}, {1, 1});
  auto el = gb_of(lex, {"x^2 - y", "y^2 - x"});
  bool found = false;
  for (const auto& p : *el.gb) found = found || format_polynomial(lex, p) == "x^4 - x";
  CHECK(found);
}

TEST_CASE("ideal dimensions") {
  PolyRing xyz({"x", "y", "z"});
  CHECK(ideal_dimension(gb_of(xyz, {})) == 3);
  PolyRing xy({"x", "y"});
  CHECK(ideal_dimension(gb_of(xy, {"x*y"})) == 1);
  CHECK(ideal_dimension(gb_of(xy, {"x", "y"})) == 0);
  CHECK(ideal_dimension(gb_of(xy, {"x^2 + 1", "x*y - 2"})) == 0);
  CHECK(ideal_dimension(gb_of(xy, {"x", "x - 1"})) == -1);
}

TEST_CASE("degree cap") {
  // the reduced basis of <xy - z^2, y^3 - x^2 z> has an element of degree 4
  PolyRing xyz({"x", "y", "z"});
  Ideal id{xyz, {parse_polynomial(xyz, "x*y - z^2"), parse_polynomial(xyz, "y^3 - x^2*z")}, std::nullopt};
  auto capped = groebner_basis(id, 3);
  REQUIRE(std::holds_alternative<CapExceeded>(capped));
  CHECK(std::get<CapExceeded>(capped).degree == 4);
  CHECK_THROWS_AS(groebner_basis(id, 2), Error);
  CHECK(std::holds_alternative<Ideal>(groebner_basis(id, 8)));
}

TEST_CASE("property: reduced basis invariants on random ideals") {
  PolyRing ring({"a", "b", "c"});
  testutil::RatGen gen(3);
  for (int t = 0; t < 40; ++t) {
    Ideal id{ring, {}, std::nullopt};
    const int ngen = 1 + static_cast<int>(gen.raw() % 3);
    for (int k = 0; k < ngen; ++k) {
      Polynomial p;
      const int nterms = 1 + static_cast<int>(gen.raw() % 3);
      for (int j = 0; j < nterms; ++j) {
        Monomial m;
        for (std::size_t v = 0; v < 3; ++v) {
          m.e[v] = static_cast<std::uint8_t>(gen.raw() % 3);
          m.deg += m.e[v];
        }
        Polynomial term{{{m, gen.next(4) + 5}}};
        p = poly_add(ring, p, term);
      }
      id.generators.push_back(p);
    }
    auto res = groebner_basis(id, 12);
    if (!std::holds_alternative<Ideal>(res)) continue;
    const Ideal& g = std::get<Ideal>(res);
    for (const auto& p : id.generators) CHECK(in_ideal(g, p));
    std::vector<Polynomial> gb = *g.gb;
    for (std::size_t i = 0; i < gb.size(); ++i) {
      CHECK(gb[i].terms.front().c == 1);
      std::vector<Polynomial> others;
      for (std::size_t j = 0; j < gb.size(); ++j)
        if (j != i) others.push_back(gb[j]);
      // re-reduction is a fixpoint
      CHECK(format_polynomial(ring, normal_form(ring, gb[i], others)) == format_polynomial(ring, gb[i]));
    }
    // determinism
    auto again = groebner_basis(id, 12);
    CHECK(printed(std::get<Ideal>(again)) == printed(g));
    // S-polynomials of the basis reduce to zero (Buchberger criterion)
    for (std::size_t i = 0; i < gb.size(); ++i)
      for (std::size_t j = i + 1; j < gb.size(); ++j) {
        Monomial l;
        for (std::size_t v = 0; v < kMaxVars; ++v) {
          l.e[v] = std::max(gb[i].lm().e[v], gb[j].lm().e[v]);
          l.deg += l.e[v];
        }
        auto quot = [&](const Monomial& a) {
          Monomial q;
          for (std::size_t v = 0; v < kMaxVars; ++v) q.e[v] = static_cast<std::uint8_t>(l.e[v] - a.e[v]);
          q.deg = l.deg - a.deg;
          return Polynomial{{{q, Rat(1)}}};
        };
        Polynomial s = poly_sub(ring, poly_mul(ring, quot(gb[i].lm()), gb[i]), poly_mul(ring, quot(gb[j].lm()), gb[j]));
        CHECK(normal_form(ring, s, gb).is_zero());
      }
  }
}

TEST_CASE("serialization round trip") {
  PolyRing ring({"x_e", "x_h", "x_f"});
  auto id = gb_of(ring, {"x_h^2 + 4*x_e*x_f", "x_e^2"});
  std::ostringstream out;
  write_ideal(out, id);
  std::istringstream in(out.str());
  std::string line;
  std::getline(in, line);
  CHECK(line == "# variables: x_e x_h x_f");
  std::size_t n = 0;
  while (std::getline(in, line)) {
    CHECK(format_polynomial(ring, parse_polynomial(ring, line)) == line);
    ++n;
  }
  CHECK(n == id.gb->size());
  CHECK_THROWS_AS(parse_polynomial(ring, "x_q + 1"), Error);
}

TEST_CASE("orbit closure equations") {
  LieAlgebra g = LieAlgebra::sl(2);
  PolyRing amb = ambient_ring(g);
  Ideal nil{amb, orbit_closure_equations(g, amb, {{2}}), std::nullopt};
  auto gb = std::get<Ideal>(groebner_basis(nil, 8));
  CHECK(ideal_dimension(gb) == 2);
  Ideal zero{amb, orbit_closure_equations(g, amb, {{1, 1}}), std::nullopt};
  CHECK(ideal_dimension(std::get<Ideal>(groebner_basis(zero, 8))) == 0);
  LieAlgebra s3 = LieAlgebra::sl(3);
  PolyRing a3 = ambient_ring(s3);
  for (const auto& o : orbit_catalog(s3)) {
    Ideal id{a3, orbit_closure_equations(s3, a3, o.partition), std::nullopt};
    auto res = groebner_basis(id, 8);
    REQUIRE(std::holds_alternative<Ideal>(res));
    CHECK(ideal_dimension(std::get<Ideal>(res)) == o.dim_orbit);
    Vec point = o.representative;
    for (const auto& p : id.generators) CHECK(poly_eval(p, point) == 0);
  }
}

TEST_CASE("stratum closure examples") {
  PairData t = make_preset("sl2-torus");
  auto ctx = nullcone_context(t);
  auto res = stratum_closure_ideal(t, ctx.strata[0], 8);
  REQUIRE(std::holds_alternative<ClosureIdeal>(res));
  const auto& ci = std::get<ClosureIdeal>(res);
  CHECK(printed(ci.ideal) == std::vector<std::string>{"x_h", "x_f"});
  CHECK(ideal_dimension(ci.ideal) == 1);

  PairData d = make_preset("sl2xsl2-diagonal");
  auto dctx = nullcone_context(d);
  auto dres = std::get<ClosureIdeal>(stratum_closure_ideal(d, dctx.strata[0], 8));
  CHECK(dres.parameters == 1);
  CHECK(dres.homogeneous);
  CHECK(ideal_dimension(dres.ideal) == 2);

  Stratum empty{"S0", t.t_basis[0], Subspace(3)};
  CHECK(ideal_dimension(std::get<ClosureIdeal>(stratum_closure_ideal(t, empty, 8)).ideal) == 0);
}
