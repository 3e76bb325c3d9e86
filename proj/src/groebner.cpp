#include "nullstrata/groebner.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <ostream>

#include "nullstrata/errors.hpp"
#include "nullstrata/grading.hpp"

namespace nullstrata {

PolyRing::PolyRing(std::vector<std::string> names, std::vector<std::size_t> blocks)
    : names_(std::move(names)), blocks_(std::move(blocks)) {
  if (names_.size() > kMaxVars) {
    throw Error(ErrorKind::PreconditionViolated, "at most " + std::to_string(kMaxVars) + " variables");
  }
  if (blocks_.empty()) blocks_ = {names_.size()};
  std::size_t total = 0;
  for (auto b : blocks_) total += b;
  if (total != names_.size()) throw Error(ErrorKind::DimensionMismatch, "block sizes do not cover the variables");
}

int PolyRing::compare(const Monomial& a, const Monomial& b) const {
  std::size_t start = 0;
  for (auto len : blocks_) {
    int da = 0, db = 0;
    for (std::size_t i = start; i < start + len; ++i) {
      da += a.e[i];
      db += b.e[i];
    }
    if (da != db) return da > db ? 1 : -1;
    for (std::size_t i = start + len; i-- > start;)
      if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;
    start += len;
  }
  return 0;
}

int Polynomial::degree() const {
  int d = -1;
  for (const auto& t : terms) d = std::max(d, t.m.deg);
  return d;
}

namespace {

Monomial mono_mul(const Monomial& a, const Monomial& b) {
  Monomial m;
  for (std::size_t i = 0; i < kMaxVars; ++i) m.e[i] = static_cast<std::uint8_t>(a.e[i] + b.e[i]);
  m.deg = a.deg + b.deg;
  return m;
}

bool mono_divides(const Monomial& a, const Monomial& b) {
  if (a.deg > b.deg) return false;
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (a.e[i] > b.e[i]) return false;
  return true;
}

Monomial mono_div(const Monomial& b, const Monomial& a) {
  Monomial m;
  for (std::size_t i = 0; i < kMaxVars; ++i) m.e[i] = static_cast<std::uint8_t>(b.e[i] - a.e[i]);
  m.deg = b.deg - a.deg;
  return m;
}

Monomial mono_lcm(const Monomial& a, const Monomial& b) {
  Monomial m;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    m.e[i] = std::max(a.e[i], b.e[i]);
    m.deg += m.e[i];
  }
  return m;
}

bool mono_coprime(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (a.e[i] && b.e[i]) return false;
  return true;
}

// a + c * m * b
Polynomial add_scaled(const PolyRing& r, const Polynomial& a, const Rat& c, const Monomial& m, const Polynomial& b) {
  Polynomial out;
  out.terms.reserve(a.terms.size() + b.terms.size());
  std::size_t i = 0, j = 0;
  while (i < a.terms.size() || j < b.terms.size()) {
    if (j == b.terms.size()) {
      out.terms.push_back(a.terms[i++]);
      continue;
    }
    Monomial bm = mono_mul(m, b.terms[j].m);
    int cmp = i == a.terms.size() ? -1 : r.compare(a.terms[i].m, bm);
    if (cmp > 0) {
      out.terms.push_back(a.terms[i++]);
    } else if (cmp < 0) {
      out.terms.push_back({bm, c * b.terms[j++].c});
    } else {
      Rat s = a.terms[i].c + c * b.terms[j].c;
      if (sgn(s) != 0) out.terms.push_back({bm, s});
      ++i;
      ++j;
    }
  }
  return out;
}

Polynomial monic(Polynomial p) {
  if (p.is_zero()) return p;
  Rat lc = p.terms.front().c;
  for (auto& t : p.terms) t.c /= lc;
  return p;
}

void sort_terms(const PolyRing& r, Polynomial& p) {
  std::sort(p.terms.begin(), p.terms.end(), [&](const Term& a, const Term& b) { return r.compare(a.m, b.m) > 0; });
  std::vector<Term> merged;
  for (auto& t : p.terms) {
    if (!merged.empty() && merged.back().m == t.m) merged.back().c += t.c;
    else merged.push_back(std::move(t));
  }
  std::erase_if(merged, [](const Term& t) { return sgn(t.c) == 0; });
  p.terms = std::move(merged);
}

}  // namespace

Polynomial poly_constant(const PolyRing&, const Rat& c) {
  Polynomial p;
  if (sgn(c) != 0) p.terms.push_back({Monomial{}, c});
  return p;
}

Polynomial poly_var(const PolyRing& r, std::size_t i) {
  if (i >= r.nvars()) throw Error(ErrorKind::DimensionMismatch, "variable index out of range");
  Monomial m;
  m.e[i] = 1;
  m.deg = 1;
  return Polynomial{{{m, Rat(1)}}};
}

Polynomial poly_add(const PolyRing& r, const Polynomial& a, const Polynomial& b) {
  return add_scaled(r, a, 1, Monomial{}, b);
}

Polynomial poly_sub(const PolyRing& r, const Polynomial& a, const Polynomial& b) {
  return add_scaled(r, a, -1, Monomial{}, b);
}

Polynomial poly_scale(const Polynomial& a, const Rat& c) {
  if (sgn(c) == 0) return {};
  Polynomial out = a;
  for (auto& t : out.terms) t.c *= c;
  return out;
}

Polynomial poly_mul(const PolyRing& r, const Polynomial& a, const Polynomial& b) {
  Polynomial out;
  for (const auto& t : a.terms) out = add_scaled(r, out, t.c, t.m, b);
  return out;
}

Rat poly_eval(const Polynomial& p, std::span<const Rat> point) {
  Rat acc = 0;
  for (const auto& t : p.terms) {
    Rat v = t.c;
    for (std::size_t i = 0; i < point.size() && i < kMaxVars; ++i)
      for (int k = 0; k < t.m.e[i]; ++k) v *= point[i];
    acc += v;
  }
  return acc;
}

bool poly_is_homogeneous(const Polynomial& p) {
  for (const auto& t : p.terms)
    if (t.m.deg != p.terms.front().m.deg) return false;
  return true;
}

bool poly_only_in(const Polynomial& p, std::size_t first) {
  for (const auto& t : p.terms)
    for (std::size_t i = 0; i < first; ++i)
      if (t.m.e[i]) return false;
  return true;
}

Polynomial poly_det(const PolyRing& r, const std::vector<std::vector<Polynomial>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return poly_constant(r, 1);
  if (n == 1) return m[0][0];
  Polynomial out;
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    std::vector<std::vector<Polynomial>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<Polynomial> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      minor.push_back(std::move(row));
    }
    Polynomial term = poly_mul(r, m[0][j], poly_det(r, minor));
    out = add_scaled(r, out, j % 2 ? Rat(-1) : Rat(1), Monomial{}, term);
  }
  return out;
}

std::string format_polynomial(const PolyRing& r, const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const auto& t : p.terms) {
    Rat a = abs(t.c);
    if (out.empty()) out += sgn(t.c) < 0 ? "-" : "";
    else out += sgn(t.c) < 0 ? " - " : " + ";
    std::string mono;
    for (std::size_t i = 0; i < r.nvars(); ++i) {
      if (!t.m.e[i]) continue;
      if (!mono.empty()) mono += "*";
      mono += r.names()[i];
      if (t.m.e[i] > 1) mono += "^" + std::to_string(t.m.e[i]);
    }
    if (mono.empty()) out += a.get_str();
    else if (a == 1) out += mono;
    else out += a.get_str() + "*" + mono;
  }
  return out;
}

Polynomial parse_polynomial(const PolyRing& r, const std::string& text) {
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < r.nvars(); ++i) index[r.names()[i]] = i;
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto fail = [&](const std::string& why) {
    throw Error(ErrorKind::ParseError, "polynomial '" + text + "' at offset " + std::to_string(pos) + ": " + why);
  };
  Polynomial out;
  bool first = true;
  skip();
  if (text.substr(pos) == "0") return out;
  while (pos < text.size()) {
    Rat sign = 1;
    skip();
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
      if (text[pos] == '-') sign = -1;
      ++pos;
    } else if (!first) {
      fail("expected + or -");
    }
    first = false;
    skip();
    Term t{Monomial{}, sign};
    bool any = false;
    while (pos < text.size()) {
      if (std::isdigit(static_cast<unsigned char>(text[pos]))) {
        std::size_t s = pos;
        while (pos < text.size() && (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '/')) ++pos;
        t.c *= parse_rat(text.substr(s, pos - s));
      } else if (std::isalpha(static_cast<unsigned char>(text[pos]))) {
        std::size_t s = pos;
        while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_')) ++pos;
        auto it = index.find(text.substr(s, pos - s));
        if (it == index.end()) fail("unknown variable");
        int e = 1;
        if (pos < text.size() && text[pos] == '^') {
          std::size_t s2 = ++pos;
          while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
          if (s2 == pos) fail("missing exponent");
          e = std::stoi(text.substr(s2, pos - s2));
        }
        t.m.e[it->second] = static_cast<std::uint8_t>(t.m.e[it->second] + e);
        t.m.deg += e;
      } else {
        fail("unexpected character");
      }
      any = true;
      if (pos < text.size() && text[pos] == '*') {
        ++pos;
        continue;
      }
      break;
    }
    if (!any) fail("empty term");
    out.terms.push_back(t);
    skip();
  }
  sort_terms(r, out);
  return out;
}

Polynomial normal_form(const PolyRing& r, const Polynomial& p, const std::vector<Polynomial>& g) {
  Polynomial rest = p, out;
  while (!rest.is_zero()) {
    const Term lead = rest.terms.front();
    const Polynomial* div = nullptr;
    for (const auto& q : g)
      if (!q.is_zero() && mono_divides(q.lm(), lead.m)) {
        div = &q;
        break;
      }
    if (div) {
      rest = add_scaled(r, rest, -lead.c / div->terms.front().c, mono_div(lead.m, div->lm()), *div);
    } else {
      out.terms.push_back(lead);
      rest.terms.erase(rest.terms.begin());
    }
  }
  return out;
}

namespace {

Polynomial s_polynomial(const PolyRing& r, const Polynomial& a, const Polynomial& b) {
  Monomial l = mono_lcm(a.lm(), b.lm());
  Polynomial left = add_scaled(r, Polynomial{}, 1 / a.terms.front().c, mono_div(l, a.lm()), a);
  return add_scaled(r, left, -1 / b.terms.front().c, mono_div(l, b.lm()), b);
}

std::vector<Polynomial> reduce_basis(const PolyRing& r, std::vector<Polynomial> g) {
  // Minimal basis: drop elements whose leading monomial is divisible by another's.
  std::vector<Polynomial> minimal;
  for (std::size_t i = 0; i < g.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < g.size() && !redundant; ++j) {
      if (i == j) continue;
      if (mono_divides(g[j].lm(), g[i].lm()) && (!(g[j].lm() == g[i].lm()) || j < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(monic(g[i]));
  }
  std::vector<Polynomial> out;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    Polynomial tail{std::vector<Term>(minimal[i].terms.begin() + 1, minimal[i].terms.end())};
    Polynomial red = normal_form(r, tail, others);
    red.terms.insert(red.terms.begin(), minimal[i].terms.front());
    out.push_back(std::move(red));
  }
  std::sort(out.begin(), out.end(), [&](const Polynomial& a, const Polynomial& b) { return r.compare(a.lm(), b.lm()) > 0; });
  return out;
}

}  // namespace

std::variant<Ideal, CapExceeded> groebner_basis(const Ideal& ideal, int degree_cap) {
  const PolyRing& r = ideal.ring;
  if (degree_cap < 1 || degree_cap > kMaxDegreeCap) {
    throw Error(ErrorKind::PreconditionViolated, "degree cap must lie in [1, " + std::to_string(kMaxDegreeCap) + "]");
  }
  std::vector<Polynomial> g;
  for (const auto& p : ideal.generators) {
    if (p.degree() > degree_cap) {
      throw Error(ErrorKind::PreconditionViolated, "generator degree " + std::to_string(p.degree()) +
                                                     " exceeds the degree cap " + std::to_string(degree_cap));
    }
    if (!p.is_zero()) g.push_back(monic(p));
  }
  struct Pair {
    std::size_t i, j;
    Monomial lcm;
  };
  std::vector<Pair> pending;
  auto is_pending = [&](std::size_t a, std::size_t b) {
    if (a > b) std::swap(a, b);
    for (const auto& p : pending)
      if (p.i == a && p.j == b) return true;
    return false;
  };
  for (std::size_t j = 0; j < g.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) pending.push_back({i, j, mono_lcm(g[i].lm(), g[j].lm())});

  while (!pending.empty()) {
    // normal strategy: smallest lcm first, ties by the pair indices
    std::size_t best = 0;
    for (std::size_t k = 1; k < pending.size(); ++k) {
      int c = r.compare(pending[k].lcm, pending[best].lcm);
      if (c < 0) best = k;
    }
    Pair p = pending[best];
    pending.erase(pending.begin() + static_cast<long>(best));
    if (mono_coprime(g[p.i].lm(), g[p.j].lm())) continue;
    bool chain = false;
    for (std::size_t k = 0; k < g.size() && !chain; ++k) {
      if (k == p.i || k == p.j) continue;
      if (mono_divides(g[k].lm(), p.lcm) && !is_pending(p.i, k) && !is_pending(p.j, k)) chain = true;
    }
    if (chain) continue;
    Polynomial s = s_polynomial(r, g[p.i], g[p.j]);
    if (s.degree() > degree_cap) return CapExceeded{degree_cap, s.degree()};
    Polynomial h = normal_form(r, s, g);
    if (h.is_zero()) continue;
    if (h.degree() > degree_cap) return CapExceeded{degree_cap, h.degree()};
    g.push_back(monic(std::move(h)));
    const std::size_t n = g.size() - 1;
    for (std::size_t i = 0; i < n; ++i) pending.push_back({i, n, mono_lcm(g[i].lm(), g[n].lm())});
  }
  Ideal out = ideal;
  out.gb = reduce_basis(r, std::move(g));
  return out;
}

int ideal_dimension(const Ideal& ideal) {
  if (!ideal.gb) throw Error(ErrorKind::PreconditionViolated, "ideal_dimension needs a Groebner basis");
  const std::size_t n = ideal.ring.nvars();
  if (n > 24) throw Error(ErrorKind::PreconditionViolated, "ideal_dimension limited to 24 variables");
  std::vector<std::uint32_t> supports;
  for (const auto& p : *ideal.gb) {
    std::uint32_t s = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (p.lm().e[i]) s |= 1u << i;
    if (s == 0) return -1;
    supports.push_back(s);
  }
  int best = 0;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    int pc = __builtin_popcount(mask);
    if (pc <= best) continue;
    bool ok = true;
    for (auto s : supports)
      if ((s & ~mask) == 0) {
        ok = false;
        break;
      }
    if (ok) best = pc;
  }
  return best;
}

void write_ideal(std::ostream& out, const Ideal& ideal) {
  out << "# variables:";
  for (const auto& n : ideal.ring.names()) out << ' ' << n;
  out << '\n';
  for (const auto& p : ideal.gb ? *ideal.gb : ideal.generators) out << format_polynomial(ideal.ring, p) << '\n';
}

PolyRing ambient_ring(const LieAlgebra& g) {
  std::vector<std::string> names;
  for (const auto& l : g.labels()) names.push_back("x_" + l);
  return PolyRing(names);
}

namespace {

using PolyMatrix = std::vector<std::vector<Polynomial>>;

PolyMatrix pm_mul(const PolyRing& r, const PolyMatrix& a, const PolyMatrix& b) {
  const std::size_t n = a.size();
  PolyMatrix c(n, std::vector<Polynomial>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (!a[i][k].is_zero() && !b[k][j].is_zero()) c[i][j] = poly_add(r, c[i][j], poly_mul(r, a[i][k], b[k][j]));
  return c;
}

void combinations(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& fn) {
  std::vector<std::size_t> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (cur.size() == k) {
      fn(cur);
      return;
    }
    for (std::size_t i = start; i < n; ++i) {
      cur.push_back(i);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
}

void push_unique(const PolyRing& r, std::vector<Polynomial>& out, Polynomial p) {
  if (p.is_zero()) return;
  p = monic(std::move(p));
  for (const auto& q : out)
    if (q.terms.size() == p.terms.size() && normal_form(r, p, {q}).is_zero()) return;
  out.push_back(std::move(p));
}

}  // namespace

std::vector<Polynomial> orbit_closure_equations(const LieAlgebra& g, const PolyRing& r, const PartitionTuple& p) {
  if (!g.has_defining_rep()) throw Error(ErrorKind::UnsupportedType, "orbit closures need a defining representation");
  if (p.size() != g.factors().size()) throw Error(ErrorKind::DimensionMismatch, "one partition per factor");
  std::vector<Polynomial> out;
  for (std::size_t f = 0; f < p.size(); ++f) {
    const auto& fac = g.factors()[f];
    const std::size_t n = fac.n;
    PolyMatrix m(n, std::vector<Polynomial>(n));
    for (std::size_t i = 0; i < g.dim(); ++i) {
      const Matrix& rep = g.defining_rep()[i];
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
          const Rat& c = rep(fac.rep_offset + a, fac.rep_offset + b);
          if (sgn(c) != 0) m[a][b] = poly_add(r, m[a][b], poly_scale(poly_var(r, i), c));
        }
    }
    // Faddeev-LeVerrier: coefficients c_{n-k} = -tr(M M_k) / k.
    PolyMatrix mk(n, std::vector<Polynomial>(n));
    Polynomial prev = poly_constant(r, 1);
    for (std::size_t k = 1; k <= n; ++k) {
      mk = pm_mul(r, m, mk);
      for (std::size_t i = 0; i < n; ++i) mk[i][i] = poly_add(r, mk[i][i], prev);
      PolyMatrix prod = pm_mul(r, m, mk);
      Polynomial tr;
      for (std::size_t i = 0; i < n; ++i) tr = poly_add(r, tr, prod[i][i]);
      prev = poly_scale(tr, Rat(-1, static_cast<long>(k)));
      push_unique(r, out, prev);
    }
    PolyMatrix pw = m;
    for (std::size_t k = 1; k < n; ++k) {
      int rk = 0;
      for (int part : p[f]) rk += std::max(part - static_cast<int>(k), 0);
      if (rk < static_cast<int>(n - k)) {
        const std::size_t sz = static_cast<std::size_t>(rk) + 1;
        combinations(n, sz, [&](const std::vector<std::size_t>& rows) {
          combinations(n, sz, [&](const std::vector<std::size_t>& cols) {
            PolyMatrix sub(sz, std::vector<Polynomial>(sz));
            for (std::size_t a = 0; a < sz; ++a)
              for (std::size_t b = 0; b < sz; ++b) sub[a][b] = pw[rows[a]][cols[b]];
            push_unique(r, out, poly_det(r, sub));
          });
        });
      }
      pw = pm_mul(r, pw, m);
    }
  }
  return out;
}

std::vector<Polynomial> subspace_equations(const PolyRing& r, const Subspace& s) {
  std::vector<Polynomial> out;
  for (const auto& a : s.annihilator().basis_vectors()) {
    Polynomial p;
    for (std::size_t i = 0; i < a.size(); ++i)
      if (sgn(a[i]) != 0) p = poly_add(r, p, poly_scale(poly_var(r, i), a[i]));
    out.push_back(std::move(p));
  }
  return out;
}

std::variant<ClosureIdeal, CapExceeded> stratum_closure_ideal(const PairData& pair, const Stratum& stratum,
                                                              int degree_cap,
                                                              const std::optional<PartitionTuple>& orbit) {
  const LieAlgebra& g = pair.g;
  PolyRing amb = ambient_ring(g);
  ClosureIdeal out{Ideal{amb, {}, std::nullopt}, true, 0};
  std::vector<Polynomial> gens;

  if (stratum.W.dim() == 0) {
    for (std::size_t i = 0; i < g.dim(); ++i) gens.push_back(poly_var(amb, i));
  } else {
    std::vector<Element> lower;
    for (const auto& l : grade(g, pair.k, stratum.h).levels)
      if (sgn(l.eigenvalue) < 0)
        for (const auto& b : l.space.basis_vectors()) lower.push_back(b);
    const std::size_t m = lower.size(), s = stratum.W.dim(), d = pair.k_perp.dim();
    out.parameters = m;
    std::vector<std::string> names;
    for (std::size_t i = 0; i < m; ++i) names.push_back("t" + std::to_string(i + 1));
    for (std::size_t i = 0; i < s; ++i) names.push_back("c" + std::to_string(i + 1));
    for (std::size_t i = 0; i < d; ++i) names.push_back("y" + std::to_string(i + 1));
    PolyRing graph(names, {m + s, d});

    // X = Ad(exp(t_1 u_1) ... exp(t_m u_m)) sum_i c_i W_i
    std::vector<Polynomial> x(g.dim());
    for (std::size_t i = 0; i < s; ++i) {
      Vec w = stratum.W.basis_vector(i);
      for (std::size_t a = 0; a < g.dim(); ++a)
        if (sgn(w[a]) != 0) x[a] = poly_add(graph, x[a], poly_scale(poly_var(graph, m + i), w[a]));
    }
    for (std::size_t i = m; i-- > 0;) {
      Matrix ad = g.ad(lower[i]);
      Polynomial tk = poly_var(graph, i);
      std::vector<Polynomial> term = x, acc = x;
      for (std::size_t k = 1;; ++k) {
        std::vector<Polynomial> next(g.dim());
        bool any = false;
        for (std::size_t a = 0; a < g.dim(); ++a)
          for (std::size_t b = 0; b < g.dim(); ++b)
            if (sgn(ad(a, b)) != 0 && !term[b].is_zero()) {
              next[a] = poly_add(graph, next[a], poly_scale(poly_mul(graph, tk, term[b]), ad(a, b) / static_cast<long>(k)));
            }
        for (const auto& q : next) any = any || !q.is_zero();
        if (!any) break;
        for (std::size_t a = 0; a < g.dim(); ++a) acc[a] = poly_add(graph, acc[a], next[a]);
        term = std::move(next);
        if (k > g.dim() + 1) throw Error(ErrorKind::PreconditionViolated, "k_h^{<0} element is not ad-nilpotent");
      }
      x = std::move(acc);
    }
    Ideal graph_ideal{graph, {}, std::nullopt};
    const auto& piv = pair.k_perp.pivots();
    for (std::size_t j = 0; j < d; ++j) graph_ideal.generators.push_back(poly_sub(graph, poly_var(graph, m + s + j), x[piv[j]]));
    for (const auto& q : graph_ideal.generators)
      if (q.degree() > degree_cap) return CapExceeded{degree_cap, q.degree()};
    auto res = groebner_basis(graph_ideal, degree_cap);
    if (auto* cap = std::get_if<CapExceeded>(&res)) return *cap;
    const Ideal& gi = std::get<Ideal>(res);
    // Keep the eliminants and rename y_j to the ambient pivot variable.
    for (const auto& q : *gi.gb) {
      if (!poly_only_in(q, m + s)) continue;
      out.homogeneous = out.homogeneous && poly_is_homogeneous(q);
      Polynomial a;
      for (const auto& t : q.terms) {
        Monomial mono;
        for (std::size_t j = 0; j < d; ++j) mono.e[piv[j]] = t.m.e[m + s + j];
        mono.deg = t.m.deg;
        a.terms.push_back({mono, t.c});
      }
      sort_terms(amb, a);
      gens.push_back(std::move(a));
    }
    for (auto& q : subspace_equations(amb, pair.k_perp)) gens.push_back(std::move(q));
  }
  if (orbit)
    for (auto& q : orbit_closure_equations(g, amb, *orbit)) gens.push_back(std::move(q));
  for (const auto& q : gens)
    if (q.degree() > degree_cap) return CapExceeded{degree_cap, q.degree()};
  out.ideal.generators = gens;
  auto res = groebner_basis(out.ideal, degree_cap);
  if (auto* cap = std::get_if<CapExceeded>(&res)) return *cap;
  out.ideal = std::get<Ideal>(std::move(res));
  return out;
}

}  // namespace nullstrata
