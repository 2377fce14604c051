#include "patlas/matrix.hpp"

#include <algorithm>
#include <sstream>

#include "patlas/errors.hpp"

namespace patlas {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows) {
  if (rows.empty()) return Matrix();
  Matrix m(rows.size(), rows[0].size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols_) throw DomainError("ragged matrix rows");
    for (std::size_t c = 0; c < m.cols_; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& cols, std::size_t rows) {
  Matrix m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != rows) throw DomainError("ragged matrix columns");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
  }
  return m;
}

Vector Matrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Vector Matrix::row(std::size_t r) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool Matrix::is_zero() const {
  for (const auto& s : data_)
    if (!s.is_zero()) return false;
  return true;
}

Scalar Matrix::trace() const {
  Scalar t;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DomainError("matrix size mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DomainError("matrix size mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

Matrix& Matrix::operator*=(const Scalar& c) {
  for (auto& s : data_) s *= c;
  return *this;
}

Matrix operator*(const Matrix& l, const Matrix& r) {
  if (l.cols_ != r.rows_) throw DomainError("matrix size mismatch in product");
  Matrix m(l.rows_, r.cols_);
  for (std::size_t i = 0; i < l.rows_; ++i)
    for (std::size_t k = 0; k < l.cols_; ++k) {
      const Scalar& a = l(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < r.cols_; ++j) {
        const Scalar& b = r(k, j);
        if (!b.is_zero()) m(i, j) += a * b;
      }
    }
  return m;
}

Vector operator*(const Matrix& l, const Vector& v) {
  if (l.cols_ != v.size()) throw DomainError("matrix-vector size mismatch");
  Vector out(l.rows_);
  for (std::size_t i = 0; i < l.rows_; ++i)
    for (std::size_t k = 0; k < l.cols_; ++k)
      if (!l(i, k).is_zero() && !v[k].is_zero()) out[i] += l(i, k) * v[k];
  return out;
}

std::string Matrix::str() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t r = 0; r < rows_; ++r) {
    if (r) os << "; ";
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c) os << ", ";
      os << (*this)(r, c).str();
    }
  }
  os << "]";
  return os.str();
}

Matrix commutator(const Matrix& l, const Matrix& r) { return l * r - r * l; }

RowEchelon row_reduce(Matrix m, std::size_t pivot_limit) {
  RowEchelon out;
  std::size_t row = 0;
  const std::size_t limit = std::min(pivot_limit, m.cols());
  for (std::size_t col = 0; col < limit && row < m.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.rows() && m(pivot, col).is_zero()) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != row)
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(row, c), m(pivot, c));
    Scalar inv = m(row, col).inverse();
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      Scalar factor = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c)
        if (!m(row, c).is_zero()) m(r, c) -= factor * m(row, c);
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(const Matrix& m) { return row_reduce(m).rank(); }

std::optional<Vector> solve_linear(const Matrix& m, const Vector& b) {
  if (b.size() != m.rows()) throw DomainError("right-hand side size mismatch");
  Matrix aug(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = b[r];
  }
  RowEchelon e = row_reduce(std::move(aug));
  if (!e.pivots.empty() && e.pivots.back() == m.cols()) return std::nullopt;
  Vector x(m.cols());
  for (std::size_t i = 0; i < e.pivots.size(); ++i) x[e.pivots[i]] = e.reduced(i, m.cols());
  return x;
}

std::vector<Vector> kernel(const Matrix& m) {
  RowEchelon e = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(m.cols());
    v[free] = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.reduced(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (!m.is_square()) throw DomainError("inverse of a non-square matrix");
  std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = 1;
  }
  RowEchelon e = row_reduce(std::move(aug));
  if (e.rank() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  Matrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = e.reduced(r, n + c);
  return inv;
}

Scalar determinant(const Matrix& input) {
  if (!input.is_square()) throw DomainError("determinant of a non-square matrix");
  Matrix m = input;
  std::size_t n = m.rows();
  Scalar det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m(pivot, col).is_zero()) ++pivot;
    if (pivot == n) return Scalar();
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(m(col, c), m(pivot, c));
      det = -det;
    }
    det *= m(col, col);
    Scalar inv = m(col, col).inverse();
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m(r, col).is_zero()) continue;
      Scalar factor = m(r, col) * inv;
      for (std::size_t c = col; c < n; ++c) m(r, c) -= factor * m(col, c);
    }
  }
  return det;
}

bool is_zero_vector(const Vector& v) {
  for (const auto& s : v)
    if (!s.is_zero()) return false;
  return true;
}

Vector zero_vector(std::size_t n) { return Vector(n); }

Vector unit_vector(std::size_t n, std::size_t i) {
  Vector v(n);
  v.at(i) = 1;
  return v;
}

Vector add(const Vector& l, const Vector& r) {
  if (l.size() != r.size()) throw DomainError("vector size mismatch");
  Vector v(l);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] += r[i];
  return v;
}

Vector sub(const Vector& l, const Vector& r) {
  if (l.size() != r.size()) throw DomainError("vector size mismatch");
  Vector v(l);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] -= r[i];
  return v;
}

Vector scale(const Vector& v, const Scalar& c) {
  Vector out(v);
  for (auto& s : out) s *= c;
  return out;
}

std::string vector_str(const Vector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += v[i].str();
  }
  return s + ")";
}

Subspace::Subspace(std::size_t ambient_dim, std::span<const Vector> spanning) : ambient_(ambient_dim) {
  if (spanning.empty()) return;
  Matrix m(spanning.size(), ambient_dim);
  for (std::size_t r = 0; r < spanning.size(); ++r) {
    if (spanning[r].size() != ambient_dim) throw DomainError("subspace vector size mismatch");
    for (std::size_t c = 0; c < ambient_dim; ++c) m(r, c) = spanning[r][c];
  }
  RowEchelon e = row_reduce(std::move(m));
  for (std::size_t i = 0; i < e.rank(); ++i) basis_.push_back(e.reduced.row(i));
  pivots_ = e.pivots;
}

Subspace Subspace::whole(std::size_t n) {
  std::vector<Vector> units;
  for (std::size_t i = 0; i < n; ++i) units.push_back(unit_vector(n, i));
  return Subspace(n, units);
}

bool Subspace::contains(const Vector& v) const {
  if (v.size() != ambient_) throw DomainError("subspace vector size mismatch");
  Vector r = v;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    Scalar c = r[pivots_[i]];
    if (c.is_zero()) continue;
    for (std::size_t k = 0; k < ambient_; ++k)
      if (!basis_[i][k].is_zero()) r[k] -= c * basis_[i][k];
  }
  return is_zero_vector(r);
}

bool Subspace::contains(const Subspace& o) const {
  for (const auto& v : o.basis_)
    if (!contains(v)) return false;
  return true;
}

Subspace Subspace::sum(const Subspace& o) const {
  std::vector<Vector> all = basis_;
  all.insert(all.end(), o.basis_.begin(), o.basis_.end());
  return Subspace(ambient_, all);
}

Subspace Subspace::add_vector(const Vector& v) const {
  std::vector<Vector> all = basis_;
  all.push_back(v);
  return Subspace(ambient_, all);
}

bool Subspace::insert(const Vector& v) {
  if (v.size() != ambient_) throw DomainError("subspace vector size mismatch");
  Vector r = v;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    Scalar c = r[pivots_[i]];
    if (c.is_zero()) continue;
    for (std::size_t k = 0; k < ambient_; ++k)
      if (!basis_[i][k].is_zero()) r[k] -= c * basis_[i][k];
  }
  std::size_t p = 0;
  while (p < ambient_ && r[p].is_zero()) ++p;
  if (p == ambient_) return false;
  Scalar inv = r[p].inverse();
  for (auto& s : r) s *= inv;
  for (auto& b : basis_) {
    Scalar c = b[p];
    if (c.is_zero()) continue;
    for (std::size_t k = 0; k < ambient_; ++k)
      if (!r[k].is_zero()) b[k] -= c * r[k];
  }
  std::size_t at = 0;
  while (at < pivots_.size() && pivots_[at] < p) ++at;
  basis_.insert(basis_.begin() + static_cast<std::ptrdiff_t>(at), std::move(r));
  pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(at), p);
  return true;
}

Vector Subspace::coordinates(const Vector& v) const {
  // RREF basis: the coordinate on basis_[i] is the pivot entry of v.
  Vector c(basis_.size());
  for (std::size_t i = 0; i < basis_.size(); ++i) c[i] = v[pivots_[i]];
  return c;
}

}  // namespace patlas
