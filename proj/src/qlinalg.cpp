#include "nullstrata/qlinalg.hpp"

#include <algorithm>
#include <sstream>

#include "nullstrata/errors.hpp"

namespace nullstrata {

Vec zero_vec(std::size_t n) { return Vec(n); }

Vec unit_vec(std::size_t n, std::size_t i) {
  Vec v(n);
  v[i] = 1;
  return v;
}

bool is_zero(std::span<const Rat> v) {
  return std::all_of(v.begin(), v.end(), [](const Rat& x) { return sgn(x) == 0; });
}

static void check_same(std::size_t a, std::size_t b) {
  if (a != b) {
    throw Error(ErrorKind::DimensionMismatch,
                "lengths " + std::to_string(a) + " and " + std::to_string(b));
  }
}

Vec add(std::span<const Rat> a, std::span<const Rat> b) {
  check_same(a.size(), b.size());
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

Vec sub(std::span<const Rat> a, std::span<const Rat> b) {
  check_same(a.size(), b.size());
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

Vec scale(const Rat& c, std::span<const Rat> v) {
  Vec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = c * v[i];
  return out;
}

void axpy(const Rat& c, std::span<const Rat> x, std::span<Rat> y) {
  check_same(x.size(), y.size());
  if (sgn(c) == 0) return;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (sgn(x[i]) != 0) y[i] += c * x[i];
  }
}

Rat dot(std::span<const Rat> a, std::span<const Rat> b) {
  check_same(a.size(), b.size());
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) != 0 && sgn(b[i]) != 0) s += a[i] * b[i];
  }
  return s;
}

Vec primitive(std::span<const Rat> v) {
  mpz_class l = 1;
  for (const Rat& x : v) {
    if (sgn(x) != 0) l = lcm(l, mpz_class(x.get_den()));
  }
  mpz_class g = 0;
  for (const Rat& x : v) {
    if (sgn(x) != 0) g = gcd(g, mpz_class(x.get_num() * (l / x.get_den())));
  }
  Vec out(v.size());
  if (g == 0) return out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    out[i] = Rat(v[i] * l / g);
  }
  return out;
}

std::string format_rat(const Rat& r) { return r.get_str(); }

std::string format_vec(std::span<const Rat> v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += v[i].get_str();
  }
  return out + ")";
}

Rat parse_rat(const std::string& text) {
  std::string t;
  for (char c : text) {
    if (c != ' ' && c != '\t') t += c;
  }
  if (t.empty()) throw Error(ErrorKind::ParseError, "empty rational");
  if (t.front() == '+') t.erase(0, 1);
  Rat r;
  auto slash = t.find('/');
  auto valid_int = [](const std::string& s) {
    std::size_t i = (!s.empty() && s[0] == '-') ? 1 : 0;
    if (i >= s.size()) return false;
    return std::all_of(s.begin() + static_cast<std::ptrdiff_t>(i), s.end(),
                       [](char c) { return c >= '0' && c <= '9'; });
  };
  if (slash == std::string::npos) {
    if (!valid_int(t)) throw Error(ErrorKind::ParseError, "not a rational: '" + text + "'");
    r = Rat(mpz_class(t));
  } else {
    std::string num = t.substr(0, slash), den = t.substr(slash + 1);
    if (!valid_int(num) || den.empty() || den[0] == '-' || !valid_int(den)) {
      throw Error(ErrorKind::ParseError, "not a rational: '" + text + "'");
    }
    mpz_class d(den);
    if (d == 0) throw Error(ErrorKind::ParseError, "zero denominator: '" + text + "'");
    r = Rat(mpz_class(num), d);
    r.canonicalize();
  }
  return r;
}

// ---------------------------------------------------------------------------

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(std::size_t cols, const std::vector<Vec>& rows) {
  Matrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    check_same(rows[i].size(), cols);
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Matrix Matrix::from_columns(std::size_t rows, const std::vector<Vec>& cols) {
  Matrix m(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    check_same(cols[j].size(), rows);
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

Vec Matrix::col_vec(std::size_t j) const {
  Vec v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  check_same(cols_, rhs.rows_);
  Matrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rat& a = (*this)(i, k);
      if (sgn(a) == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) {
        if (sgn(rhs(k, j)) != 0) out(i, j) += a * rhs(k, j);
      }
    }
  }
  return out;
}

Matrix Matrix::operator+(const Matrix& rhs) const {
  check_same(rows_, rhs.rows_);
  check_same(cols_, rhs.cols_);
  Matrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += rhs.data_[i];
  return out;
}

Matrix Matrix::operator-(const Matrix& rhs) const {
  check_same(rows_, rhs.rows_);
  check_same(cols_, rhs.cols_);
  Matrix out = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] -= rhs.data_[i];
  return out;
}

Vec Matrix::apply(std::span<const Rat> x) const {
  check_same(cols_, x.size());
  Vec out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = dot(row(i), x);
  return out;
}

Rat Matrix::trace() const {
  Rat t = 0;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rat& x) { return sgn(x) == 0; });
}

Matrix matrix_scale(const Rat& c, const Matrix& m) {
  Matrix out = m;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) *= c;
  return out;
}

// ---------------------------------------------------------------------------

std::vector<std::size_t> rref_in_place(Matrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && sgn(m(p, c)) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != r) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    }
    Rat inv = 1 / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || sgn(m(i, c)) == 0) continue;
      Rat f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) {
        if (sgn(m(r, j)) != 0) m(i, j) -= f * m(r, j);
      }
    }
    pivots.push_back(c);
    ++r;
  }
  Matrix trimmed(r, m.cols());
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) trimmed(i, j) = m(i, j);
  m = std::move(trimmed);
  return pivots;
}

std::size_t rank(Matrix m) { return rref_in_place(m).size(); }

Matrix kernel_basis(const Matrix& m) {
  Matrix r = m;
  auto pivots = rref_in_place(r);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vec> rows;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec v(m.cols());
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r(i, free);
    rows.push_back(std::move(v));
  }
  Matrix k = Matrix::from_rows(m.cols(), rows);
  rref_in_place(k);
  return k;
}

// ---------------------------------------------------------------------------

Subspace Subspace::from_matrix_rows(Matrix rows) {
  Subspace s(rows.cols());
  s.pivots_ = rref_in_place(rows);
  s.basis_ = std::move(rows);
  return s;
}

Subspace Subspace::span(std::size_t ambient_dim, const std::vector<Vec>& vectors) {
  return from_matrix_rows(Matrix::from_rows(ambient_dim, vectors));
}

Subspace Subspace::full(std::size_t ambient_dim) {
  return from_matrix_rows(Matrix::identity(ambient_dim));
}

std::vector<Vec> Subspace::basis_vectors() const {
  std::vector<Vec> out;
  out.reserve(dim());
  for (std::size_t i = 0; i < dim(); ++i) out.push_back(basis_vector(i));
  return out;
}

std::optional<Vec> Subspace::coordinates(std::span<const Rat> v) const {
  check_same(v.size(), ambient_dim());
  // In reduced echelon form the coordinate on row i is the pivot entry of v.
  Vec coords(dim());
  Vec residual(v.begin(), v.end());
  for (std::size_t i = 0; i < dim(); ++i) {
    coords[i] = residual[pivots_[i]];
    axpy(-coords[i], basis_.row(i), residual);
  }
  if (!nullstrata::is_zero(residual)) return std::nullopt;
  return coords;
}

bool Subspace::contains(std::span<const Rat> v) const { return coordinates(v).has_value(); }

bool Subspace::contains(const Subspace& other) const {
  check_same(ambient_dim(), other.ambient_dim());
  for (std::size_t i = 0; i < other.dim(); ++i) {
    if (!contains(other.basis_.row(i))) return false;
  }
  return true;
}

Subspace Subspace::sum(const Subspace& other) const {
  check_same(ambient_dim(), other.ambient_dim());
  Matrix stacked(dim() + other.dim(), ambient_dim());
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = 0; j < ambient_dim(); ++j) stacked(i, j) = basis_(i, j);
  for (std::size_t i = 0; i < other.dim(); ++i)
    for (std::size_t j = 0; j < ambient_dim(); ++j) stacked(dim() + i, j) = other.basis_(i, j);
  return from_matrix_rows(std::move(stacked));
}

Subspace Subspace::annihilator() const { return from_matrix_rows(kernel_basis(basis_)); }

Subspace Subspace::intersect(const Subspace& other) const {
  check_same(ambient_dim(), other.ambient_dim());
  return annihilator().sum(other.annihilator()).annihilator();
}

std::variant<Subspace, bool> subspace_ops(const Subspace& a, const Subspace& b, SubspaceOp mode) {
  check_same(a.ambient_dim(), b.ambient_dim());
  switch (mode) {
    case SubspaceOp::Sum: return a.sum(b);
    case SubspaceOp::Intersect: return a.intersect(b);
    case SubspaceOp::Contains: return a.contains(b);
  }
  return false;
}

std::optional<LinearSolution> solve_linear(const Matrix& m, std::span<const Rat> b) {
  check_same(m.rows(), b.size());
  Matrix aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  auto pivots = rref_in_place(aug);
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
  Vec x(m.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug(i, m.cols());
  return LinearSolution{std::move(x), Subspace::from_matrix_rows(kernel_basis(m))};
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  const std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  auto pivots = rref_in_place(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

}  // namespace nullstrata
