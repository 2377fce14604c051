#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "patlas/scalar.hpp"

namespace patlas {

using Vector = std::vector<Scalar>;

/// Dense row-major matrix of exact scalars.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<Vector>& rows);
  static Matrix from_columns(const std::vector<Vector>& cols, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector column(std::size_t c) const;
  Vector row(std::size_t r) const;
  Matrix transpose() const;
  bool is_zero() const;
  Scalar trace() const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(const Scalar& c);
  friend Matrix operator+(Matrix l, const Matrix& r) { return l += r; }
  friend Matrix operator-(Matrix l, const Matrix& r) { return l -= r; }
  friend Matrix operator*(Matrix l, const Scalar& c) { return l *= c; }
  friend Matrix operator*(const Scalar& c, Matrix r) { return r *= c; }
  friend Matrix operator*(const Matrix& l, const Matrix& r);
  friend Vector operator*(const Matrix& l, const Vector& v);
  friend bool operator==(const Matrix& l, const Matrix& r) {
    return l.rows_ == r.rows_ && l.cols_ == r.cols_ && l.data_ == r.data_;
  }
  friend bool operator!=(const Matrix& l, const Matrix& r) { return !(l == r); }

  std::string str() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

/// l*r - r*l
Matrix commutator(const Matrix& l, const Matrix& r);

struct RowEchelon {
  Matrix reduced;                   // reduced row echelon form
  std::vector<std::size_t> pivots;  // pivot column per nonzero row
  std::size_t rank() const { return pivots.size(); }
};

/// Pivots are taken only among the first pivot_limit columns; row operations
/// still apply to whole rows (so trailing columns act as right-hand sides).
RowEchelon row_reduce(Matrix m, std::size_t pivot_limit = static_cast<std::size_t>(-1));
std::size_t rank(const Matrix& m);

/// Some x with m*x == b, or nullopt.
std::optional<Vector> solve_linear(const Matrix& m, const Vector& b);

/// Null-space basis; each vector has a 1 at its free column.
std::vector<Vector> kernel(const Matrix& m);

std::optional<Matrix> inverse(const Matrix& m);
Scalar determinant(const Matrix& m);

bool is_zero_vector(const Vector& v);
Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t i);
Vector add(const Vector& l, const Vector& r);
Vector sub(const Vector& l, const Vector& r);
Vector scale(const Vector& v, const Scalar& c);
std::string vector_str(const Vector& v);

/// Subspace of an ambient coordinate space, kept as an RREF row basis so
/// that equality of subspaces is equality of bases.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient_dim) : ambient_(ambient_dim) {}
  Subspace(std::size_t ambient_dim, std::span<const Vector> spanning);

  static Subspace whole(std::size_t n);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Vector>& basis() const { return basis_; }
  bool contains(const Vector& v) const;
  bool contains(const Subspace& o) const;
  Subspace sum(const Subspace& o) const;
  Subspace add_vector(const Vector& v) const;
  /// Adds v in place, keeping the basis in RREF; false if v was already in.
  bool insert(const Vector& v);
  /// Coordinates of v in basis(), assuming contains(v).
  Vector coordinates(const Vector& v) const;

  friend bool operator==(const Subspace& l, const Subspace& r) {
    return l.ambient_ == r.ambient_ && l.basis_ == r.basis_;
  }

 private:
  std::size_t ambient_;
  std::vector<Vector> basis_;
  std::vector<std::size_t> pivots_;
};

}  // namespace patlas
