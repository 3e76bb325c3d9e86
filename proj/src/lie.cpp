#include "nullstrata/lie.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <map>
#include <ostream>
#include <regex>
#include <sstream>
#include <tuple>

#include "nullstrata/errors.hpp"

namespace nullstrata {

namespace {

Matrix elementary(std::size_t n, std::size_t i, std::size_t j) {
  Matrix m(n, n);
  m(i, j) = 1;
  return m;
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

Vec flatten(const Matrix& m) {
  Vec v;
  v.reserve(m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) v.push_back(m(i, j));
  return v;
}

}  // namespace

LieAlgebra LieAlgebra::sl(std::size_t n) {
  if (n < 2 || n > 4) {
    throw Error(ErrorKind::UnsupportedType, "builtin sl(n) requires 2 <= n <= 4, got " + std::to_string(n));
  }
  LieAlgebra g;
  std::vector<std::pair<std::size_t, std::size_t>> positive;
  for (std::size_t height = 1; height < n; ++height)
    for (std::size_t i = 0; i + height < n; ++i) positive.emplace_back(i, i + height);

  auto label = [n](const char* stem, std::size_t a, std::size_t b) {
    return std::string(stem) + std::to_string(a + 1) + (b == SIZE_MAX ? "" : std::to_string(b + 1));
  };
  for (auto [i, j] : positive) {
    g.rep_.push_back(elementary(n, i, j));
    g.labels_.push_back(n == 2 ? "e" : label("e", i, j));
  }
  for (std::size_t i = 0; i + 1 < n; ++i) {
    g.rep_.push_back(elementary(n, i, i) - elementary(n, i + 1, i + 1));
    g.labels_.push_back(n == 2 ? "h" : label("h", i, SIZE_MAX));
  }
  for (auto [i, j] : positive) {
    g.rep_.push_back(elementary(n, j, i));
    g.labels_.push_back(n == 2 ? "f" : label("e", j, i));
  }
  g.rep_dim_ = n;
  g.factors_.push_back({n, 0, g.rep_.size(), 0});

  const std::size_t d = g.rep_.size();
  std::vector<std::vector<Vec>> table(d, std::vector<Vec>(d, Vec(d)));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) table[i][j] = g.from_matrix(commutator(g.rep_[i], g.rep_[j]));
  g.build_sparse(table);
  g.validate();
  g.compute_killing();
  return g;
}

LieAlgebra LieAlgebra::direct_sum(const std::vector<LieAlgebra>& summands) {
  if (summands.empty()) throw Error(ErrorKind::PreconditionViolated, "empty direct sum");
  LieAlgebra g;
  std::size_t d = 0, rd = 0;
  bool reps = true;
  for (const auto& s : summands) {
    d += s.dim();
    rd += s.rep_dim();
    reps = reps && s.has_defining_rep();
  }
  std::vector<std::vector<Vec>> table(d, std::vector<Vec>(d, Vec(d)));
  std::size_t off = 0, roff = 0;
  for (std::size_t f = 0; f < summands.size(); ++f) {
    const auto& s = summands[f];
    for (std::size_t i = 0; i < s.dim(); ++i) {
      g.labels_.push_back(s.labels_[i] + "_" + std::to_string(f + 1));
      for (std::size_t j = 0; j < s.dim(); ++j)
        for (const auto& [k, c] : s.sparse_[i * s.dim() + j]) table[off + i][off + j][off + k] = c;
      if (reps) {
        Matrix m(rd, rd);
        for (std::size_t a = 0; a < s.rep_dim(); ++a)
          for (std::size_t b = 0; b < s.rep_dim(); ++b) m(roff + a, roff + b) = s.rep_[i](a, b);
        g.rep_.push_back(std::move(m));
      }
    }
    if (reps) {
      for (const auto& fac : s.factors_) {
        g.factors_.push_back({fac.n, fac.basis_offset + off, fac.basis_dim, fac.rep_offset + roff});
      }
    }
    off += s.dim();
    roff += s.rep_dim();
  }
  if (reps) g.rep_dim_ = rd;
  else g.factors_.clear();
  g.build_sparse(table);
  g.validate();
  g.compute_killing();
  return g;
}

LieAlgebra LieAlgebra::from_table(std::vector<std::string> labels,
                                  const std::vector<std::vector<Vec>>& table) {
  const std::size_t d = table.size();
  for (const auto& row : table) {
    if (row.size() != d) throw Error(ErrorKind::ParseError, "structure-constant table is not square");
    for (const auto& v : row)
      if (v.size() != d) throw Error(ErrorKind::ParseError, "structure-constant table is not square");
  }
  if (labels.empty()) {
    for (std::size_t i = 0; i < d; ++i) labels.push_back("x" + std::to_string(i));
  }
  if (labels.size() != d) throw Error(ErrorKind::ParseError, "label count does not match dimension");
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      for (std::size_t k = 0; k < d; ++k) {
        if (table[i][j][k] != -table[j][i][k]) {
          throw Error(ErrorKind::AntisymmetryViolation,
                      "c[" + std::to_string(i) + "][" + std::to_string(j) + "][" + std::to_string(k) +
                          "] != -c[" + std::to_string(j) + "][" + std::to_string(i) + "][" +
                          std::to_string(k) + "]");
        }
      }
    }
  }
  LieAlgebra g;
  g.labels_ = std::move(labels);
  g.build_sparse(table);
  g.validate();
  g.compute_killing();
  return g;
}

void LieAlgebra::build_sparse(const std::vector<std::vector<Vec>>& table) {
  const std::size_t d = table.size();
  sparse_.assign(d * d, {});
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k)
        if (sgn(table[i][j][k]) != 0) sparse_[i * d + j].emplace_back(k, table[i][j][k]);
}

void LieAlgebra::validate() const {
  const std::size_t d = dim();
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i; j < d; ++j) {
      Element bij = bracket(basis_element(i), basis_element(j));
      Element bji = bracket(basis_element(j), basis_element(i));
      if (!is_zero(add(bij, bji))) {
        throw Error(ErrorKind::AntisymmetryViolation,
                    "basis pair (" + labels_[i] + ", " + labels_[j] + ")");
      }
    }
  }
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i + 1; j < d; ++j) {
      for (std::size_t k = j + 1; k < d; ++k) {
        Element xi = basis_element(i), xj = basis_element(j), xk = basis_element(k);
        Element s = bracket(xi, bracket(xj, xk));
        s = add(s, bracket(xj, bracket(xk, xi)));
        s = add(s, bracket(xk, bracket(xi, xj)));
        if (!is_zero(s)) {
          throw Error(ErrorKind::JacobiViolation,
                      "basis triple (" + labels_[i] + ", " + labels_[j] + ", " + labels_[k] + ")");
        }
      }
    }
  }
}

void LieAlgebra::compute_killing() {
  const std::size_t d = dim();
  std::vector<Matrix> ads;
  ads.reserve(d);
  for (std::size_t i = 0; i < d; ++i) ads.push_back(ad(basis_element(i)));
  killing_ = Matrix(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i; j < d; ++j) {
      killing_(i, j) = (ads[i] * ads[j]).trace();
      killing_(j, i) = killing_(i, j);
    }
  Matrix ker = kernel_basis(killing_);
  if (ker.rows() > 0) {
    throw Error(ErrorKind::DegenerateKilling, "kernel vector " + format(ker.row_vec(0)));
  }
}

std::size_t LieAlgebra::index_of(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) throw Error(ErrorKind::ParseError, "unknown basis label '" + label + "'");
  return static_cast<std::size_t>(it - labels_.begin());
}

Rat LieAlgebra::structure_constant(std::size_t i, std::size_t j, std::size_t k) const {
  for (const auto& [kk, c] : sparse_[i * dim() + j])
    if (kk == k) return c;
  return 0;
}

Element LieAlgebra::bracket(const Element& x, const Element& y) const {
  const std::size_t d = dim();
  if (x.size() != d || y.size() != d) {
    throw Error(ErrorKind::DimensionMismatch, "bracket operands must have length " + std::to_string(d));
  }
  Element out(d);
  for (std::size_t i = 0; i < d; ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (sgn(y[j]) == 0) continue;
      const auto& entries = sparse_[i * d + j];
      if (entries.empty()) continue;
      Rat xy = x[i] * y[j];
      for (const auto& [k, c] : entries) out[k] += xy * c;
    }
  }
  return out;
}

Matrix LieAlgebra::ad(const Element& x) const {
  const std::size_t d = dim();
  Matrix m(d, d);
  for (std::size_t j = 0; j < d; ++j) {
    Element col = bracket(x, basis_element(j));
    for (std::size_t k = 0; k < d; ++k) m(k, j) = col[k];
  }
  return m;
}

Rat LieAlgebra::killing_form(const Element& x, const Element& y) const {
  return dot(x, killing_.apply(y));
}

Vec LieAlgebra::pairing(const Element& x) const { return killing_.apply(x); }

Element LieAlgebra::dualize(const Vec& functional) const {
  auto sol = solve_linear(killing_, functional);
  // Killing form is nondegenerate by construction.
  return sol->particular;
}

Matrix LieAlgebra::to_matrix(const Element& x) const {
  if (!has_defining_rep()) throw Error(ErrorKind::UnsupportedType, "no defining representation");
  Matrix m(rep_dim_, rep_dim_);
  for (std::size_t i = 0; i < dim(); ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t a = 0; a < rep_dim_; ++a)
      for (std::size_t b = 0; b < rep_dim_; ++b)
        if (sgn(rep_[i](a, b)) != 0) m(a, b) += x[i] * rep_[i](a, b);
  }
  return m;
}

Element LieAlgebra::from_matrix(const Matrix& m) const {
  if (rep_.empty()) throw Error(ErrorKind::UnsupportedType, "no defining representation");
  std::vector<Vec> cols;
  cols.reserve(rep_.size());
  for (const auto& r : rep_) cols.push_back(flatten(r));
  Matrix a = Matrix::from_columns(m.rows() * m.cols(), cols);
  auto sol = solve_linear(a, flatten(m));
  if (!sol) throw Error(ErrorKind::PreconditionViolated, "matrix is not in the image of the representation");
  return sol->particular;
}

Element LieAlgebra::exp_ad(const Element& u, const Rat& t, const Element& x) const {
  Element out = x;
  Element term = x;
  for (std::size_t k = 1; k <= dim() + 1; ++k) {
    term = bracket(u, term);
    if (is_zero(term)) return out;
    Rat f = t / k;
    for (auto& c : term) c *= f;
    axpy(1, term, out);
  }
  throw Error(ErrorKind::PreconditionViolated, "exp_ad: " + format(u) + " is not ad-nilpotent");
}

std::string LieAlgebra::format(const Element& x) const {
  std::string out;
  for (std::size_t i = 0; i < x.size() && i < dim(); ++i) {
    if (sgn(x[i]) == 0) continue;
    Rat c = x[i];
    if (!out.empty()) out += sgn(c) < 0 ? " - " : " + ";
    else if (sgn(c) < 0) out += "-";
    Rat a = abs(c);
    if (a != 1) out += a.get_str() + "*";
    out += labels_[i];
  }
  return out.empty() ? "0" : out;
}

// ---------------------------------------------------------------------------

LieAlgebra parse_structure_constants(std::istream& in) {
  std::map<std::tuple<std::size_t, std::size_t, std::size_t>, Rat> explicit_entries;
  std::vector<std::string> labels;
  std::size_t declared_dim = 0;
  std::size_t max_index = 0;
  bool any = false;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;
    auto where = [&] { return "line " + std::to_string(lineno); };
    if (first == "dim") {
      if (!(ls >> declared_dim)) throw Error(ErrorKind::ParseError, where() + ": expected 'dim N'");
      continue;
    }
    if (first == "labels") {
      std::string l;
      while (ls >> l) labels.push_back(l);
      continue;
    }
    std::string sj, sk, sc, extra;
    if (!(ls >> sj >> sk >> sc) || (ls >> extra)) {
      throw Error(ErrorKind::ParseError, where() + ": expected 'i j k c'");
    }
    std::size_t idx[3];
    const std::string* parts[3] = {&first, &sj, &sk};
    for (int p = 0; p < 3; ++p) {
      const auto& s = *parts[p];
      if (s.empty() || !std::all_of(s.begin(), s.end(), [](char ch) { return ch >= '0' && ch <= '9'; })) {
        throw Error(ErrorKind::ParseError, where() + ": bad index '" + s + "'");
      }
      idx[p] = std::stoul(s);
      max_index = std::max(max_index, idx[p]);
    }
    Rat c;
    try {
      c = parse_rat(sc);
    } catch (const Error& e) {
      throw Error(ErrorKind::ParseError, where() + ": " + e.what());
    }
    auto key = std::make_tuple(idx[0], idx[1], idx[2]);
    if (explicit_entries.count(key) && explicit_entries[key] != c) {
      throw Error(ErrorKind::ParseError, where() + ": conflicting duplicate entry");
    }
    explicit_entries[key] = c;
    any = true;
  }
  std::size_t d = declared_dim;
  if (d == 0) d = labels.empty() ? (any ? max_index + 1 : 0) : labels.size();
  if (d == 0) throw Error(ErrorKind::ParseError, "empty structure-constant table");
  if (any && max_index >= d) throw Error(ErrorKind::ParseError, "index exceeds declared dimension");
  if (!labels.empty() && labels.size() != d) throw Error(ErrorKind::ParseError, "label count does not match dimension");

  std::vector<std::vector<Vec>> table(d, std::vector<Vec>(d, Vec(d)));
  for (const auto& [key, c] : explicit_entries) {
    auto [i, j, k] = key;
    if (i == j && sgn(c) != 0) {
      throw Error(ErrorKind::AntisymmetryViolation,
                  "c[" + std::to_string(i) + "][" + std::to_string(i) + "][" + std::to_string(k) + "] != 0");
    }
    table[i][j][k] = c;
    auto mirror = std::make_tuple(j, i, k);
    auto it = explicit_entries.find(mirror);
    if (it == explicit_entries.end()) {
      table[j][i][k] = -c;
    } else if (it->second != -c) {
      throw Error(ErrorKind::AntisymmetryViolation,
                  "c[" + std::to_string(i) + "][" + std::to_string(j) + "][" + std::to_string(k) +
                      "] = " + c.get_str() + " but c[" + std::to_string(j) + "][" + std::to_string(i) +
                      "][" + std::to_string(k) + "] = " + it->second.get_str());
    }
  }
  return LieAlgebra::from_table(labels, table);
}

void write_structure_constants(std::ostream& out, const LieAlgebra& g) {
  out << "dim " << g.dim() << "\nlabels";
  for (const auto& l : g.labels()) out << ' ' << l;
  out << '\n';
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = 0; j < g.dim(); ++j)
      for (std::size_t k = 0; k < g.dim(); ++k) {
        Rat c = g.structure_constant(i, j, k);
        if (sgn(c) != 0) out << i << ' ' << j << ' ' << k << ' ' << c.get_str() << '\n';
      }
}

bool is_builtin_name(const std::string& name) {
  static const std::regex re(R"(\s*sl\(\s*[0-9]+\s*\)(\s*\+\s*sl\(\s*[0-9]+\s*\))*\s*)");
  return std::regex_match(name, re);
}

LieAlgebra builtin_algebra(const std::string& name) {
  if (!is_builtin_name(name)) throw Error(ErrorKind::ParseError, "unknown builtin algebra '" + name + "'");
  static const std::regex part(R"(sl\(\s*([0-9]+)\s*\))");
  std::vector<LieAlgebra> summands;
  for (auto it = std::sregex_iterator(name.begin(), name.end(), part); it != std::sregex_iterator(); ++it) {
    summands.push_back(LieAlgebra::sl(std::stoul((*it)[1].str())));
  }
  if (summands.size() == 1) return summands.front();
  return LieAlgebra::direct_sum(summands);
}

Element parse_element(const LieAlgebra& g, const std::string& text) {
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  if (t.empty()) throw Error(ErrorKind::ParseError, "empty element");
  if (t == "0") return g.zero();
  Element x = g.zero();
  std::size_t pos = 0;
  while (pos < t.size()) {
    bool negative = false;
    if (t[pos] == '+' || t[pos] == '-') {
      negative = t[pos] == '-';
      ++pos;
    } else if (pos != 0) {
      throw Error(ErrorKind::ParseError, "expected a sign in '" + text + "'");
    }
    std::size_t end = t.find_first_of("+-", pos);
    if (end == std::string::npos) end = t.size();
    std::string term = t.substr(pos, end - pos);
    pos = end;
    if (term.empty()) throw Error(ErrorKind::ParseError, "empty term in '" + text + "'");
    Rat c(1);
    if (auto star = term.find('*'); star != std::string::npos) {
      c = parse_rat(term.substr(0, star));
      term = term.substr(star + 1);
    }
    std::size_t i = 0;
    for (; i < g.dim(); ++i)
      if (g.labels()[i] == term) break;
    if (i == g.dim()) throw Error(ErrorKind::ParseError, "unknown basis label '" + term + "' in '" + text + "'");
    x[i] += negative ? Rat(-c) : c;
  }
  return x;
}

}  // namespace nullstrata
