#pragma once
// Buchberger's algorithm over Q, and the ideals certifying stratum
// dimensions.

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "nullstrata/instability.hpp"
#include "nullstrata/orbits.hpp"

namespace nullstrata {

constexpr std::size_t kMaxVars = 32;
constexpr int kMaxDegreeCap = 64;

struct Monomial {
  std::array<std::uint8_t, kMaxVars> e{};
  int deg = 0;
  bool operator==(const Monomial&) const = default;
};

// Variables split into consecutive blocks; monomials compare by degrevlex
// on the first block, then on the next, and so on. One block is plain
// degrevlex.
class PolyRing {
 public:
  explicit PolyRing(std::vector<std::string> names, std::vector<std::size_t> blocks = {});
  std::size_t nvars() const noexcept { return names_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::vector<std::size_t>& blocks() const noexcept { return blocks_; }
  // > 0 if a > b.
  int compare(const Monomial& a, const Monomial& b) const;

 private:
  std::vector<std::string> names_;
  std::vector<std::size_t> blocks_;
};

struct Term {
  Monomial m;
  Rat c;
};

// Terms strictly decreasing in the ring order, no zero coefficients.
struct Polynomial {
  std::vector<Term> terms;
  bool is_zero() const noexcept { return terms.empty(); }
  const Monomial& lm() const { return terms.front().m; }
  int degree() const;
};

Polynomial poly_constant(const PolyRing& r, const Rat& c);
Polynomial poly_var(const PolyRing& r, std::size_t i);
Polynomial poly_add(const PolyRing& r, const Polynomial& a, const Polynomial& b);
Polynomial poly_sub(const PolyRing& r, const Polynomial& a, const Polynomial& b);
Polynomial poly_scale(const Polynomial& a, const Rat& c);
Polynomial poly_mul(const PolyRing& r, const Polynomial& a, const Polynomial& b);
Rat poly_eval(const Polynomial& p, std::span<const Rat> point);
bool poly_is_homogeneous(const Polynomial& p);
// True when p only involves variables with index >= first.
bool poly_only_in(const Polynomial& p, std::size_t first);

// Determinant of a small square matrix of polynomials (Laplace expansion).
Polynomial poly_det(const PolyRing& r, const std::vector<std::vector<Polynomial>>& m);

std::string format_polynomial(const PolyRing& r, const Polynomial& p);
// Inverse of format_polynomial; throws ParseError.
Polynomial parse_polynomial(const PolyRing& r, const std::string& text);

struct Ideal {
  PolyRing ring;
  std::vector<Polynomial> generators;
  std::optional<std::vector<Polynomial>> gb;  // reduced, monic, sorted by leading monomial
};

struct CapExceeded {
  int cap = 0;
  int degree = 0;
};

// Reduced Groebner basis. Throws PreconditionViolated when the cap is below a
// generator degree or above kMaxDegreeCap.
std::variant<Ideal, CapExceeded> groebner_basis(const Ideal& ideal, int degree_cap);

// Full reduction of p modulo the polynomials in g.
Polynomial normal_form(const PolyRing& r, const Polynomial& p, const std::vector<Polynomial>& g);

// Max |S| such that no leading monomial of gb is supported in S; -1 for the
// unit ideal. Requires gb.
int ideal_dimension(const Ideal& ideal);

void write_ideal(std::ostream& out, const Ideal& ideal);

// Ambient variables x_<label> of g.
PolyRing ambient_ring(const LieAlgebra& g);

// Equations of the closure of the orbit with the given Jordan types, in the
// ambient coordinates: vanishing characteristic coefficients of each factor
// block M, and the (r_k + 1)-minors of M^k where r_k = sum max(p_i - k, 0)
// whenever r_k < n - k.
std::vector<Polynomial> orbit_closure_equations(const LieAlgebra& g, const PolyRing& r, const PartitionTuple& p);

// Linear equations cutting out a subspace in the ambient coordinates.
std::vector<Polynomial> subspace_equations(const PolyRing& r, const Subspace& s);

struct ClosureIdeal {
  Ideal ideal;            // ambient coordinates, with gb
  bool homogeneous = true;
  std::size_t parameters = 0;  // dim of k_h^{<0}
};

// Closure of K W for the stratum: parametrized by exp(t_1 u_1) ... exp(t_m u_m)
// over a basis u of k_h^{<0} (ordered by h-level) applied to W, with the
// parameters eliminated. Optionally intersected with an orbit closure.
std::variant<ClosureIdeal, CapExceeded> stratum_closure_ideal(
    const PairData& pair, const Stratum& stratum, int degree_cap,
    const std::optional<PartitionTuple>& orbit = std::nullopt);

}  // namespace nullstrata
