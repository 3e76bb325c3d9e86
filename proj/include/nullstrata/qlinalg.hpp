#pragma once
// Exact linear algebra over Q.
//
// Subspaces are stored in reduced row-echelon form, which is canonical: two
// subspaces are equal iff their echelon matrices are identical.

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace nullstrata {

using Rat = mpq_class;
using Vec = std::vector<Rat>;

Vec zero_vec(std::size_t n);
Vec unit_vec(std::size_t n, std::size_t i);
bool is_zero(std::span<const Rat> v);
Vec add(std::span<const Rat> a, std::span<const Rat> b);
Vec sub(std::span<const Rat> a, std::span<const Rat> b);
Vec scale(const Rat& c, std::span<const Rat> v);
void axpy(const Rat& c, std::span<const Rat> x, std::span<Rat> y);  // y += c x
Rat dot(std::span<const Rat> a, std::span<const Rat> b);

// Scales a nonzero vector to the primitive integer vector on the same ray
// (lcm of denominators, then divide out the gcd of numerators).
Vec primitive(std::span<const Rat> v);

std::string format_rat(const Rat& r);
std::string format_vec(std::span<const Rat> v);
Rat parse_rat(const std::string& text);

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static Matrix identity(std::size_t n);
  static Matrix from_rows(std::size_t cols, const std::vector<Vec>& rows);
  static Matrix from_columns(std::size_t rows, const std::vector<Vec>& cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Rat& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rat& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<Rat> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const Rat> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
  Vec row_vec(std::size_t i) const { return {row(i).begin(), row(i).end()}; }
  Vec col_vec(std::size_t j) const;

  Matrix transpose() const;
  Matrix operator*(const Matrix& rhs) const;
  Matrix operator+(const Matrix& rhs) const;
  Matrix operator-(const Matrix& rhs) const;
  Vec apply(std::span<const Rat> x) const;
  Rat trace() const;
  bool is_zero() const;

  bool operator==(const Matrix& rhs) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rat> data_;
};

Matrix matrix_scale(const Rat& c, const Matrix& m);

// In-place reduced row-echelon form; returns the pivot column of each
// nonzero row. Zero rows are dropped from the result.
std::vector<std::size_t> rref_in_place(Matrix& m);
std::size_t rank(Matrix m);
// Basis (as rows, canonical form) of {x : m x = 0}.
Matrix kernel_basis(const Matrix& m);

class Subspace {
 public:
  explicit Subspace(std::size_t ambient_dim = 0) : basis_(0, ambient_dim) {}
  static Subspace span(std::size_t ambient_dim, const std::vector<Vec>& vectors);
  static Subspace from_matrix_rows(Matrix rows);
  static Subspace full(std::size_t ambient_dim);

  std::size_t ambient_dim() const noexcept { return basis_.cols(); }
  std::size_t dim() const noexcept { return basis_.rows(); }
  bool is_zero() const noexcept { return dim() == 0; }
  const Matrix& basis() const noexcept { return basis_; }
  Vec basis_vector(std::size_t i) const { return basis_.row_vec(i); }
  std::vector<Vec> basis_vectors() const;
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

  bool contains(std::span<const Rat> v) const;
  bool contains(const Subspace& other) const;
  // Coordinates of v in the echelon basis, if v lies in the subspace.
  std::optional<Vec> coordinates(std::span<const Rat> v) const;
  Subspace sum(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;
  // {x : <x, s> = 0 for all s} under the standard dot product.
  Subspace annihilator() const;

  bool operator==(const Subspace& rhs) const { return basis_ == rhs.basis_; }

 private:
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

enum class SubspaceOp { Sum, Intersect, Contains };

// sum / intersect return a Subspace; contains tests B ⊆ A and returns bool.
std::variant<Subspace, bool> subspace_ops(const Subspace& a, const Subspace& b, SubspaceOp mode);

struct LinearSolution {
  Vec particular;  // free variables set to zero
  Subspace kernel;
};

// Exact solution set of m x = b, or nullopt when b is outside the column space.
std::optional<LinearSolution> solve_linear(const Matrix& m, std::span<const Rat> b);

std::optional<Matrix> inverse(const Matrix& m);

}  // namespace nullstrata
