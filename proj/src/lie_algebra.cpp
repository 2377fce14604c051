#include "patlas/lie_algebra.hpp"

#include <sstream>

#include "patlas/errors.hpp"

namespace patlas {

LieAlgebra::LieAlgebra(std::vector<std::string> labels, StructureConstants c)
    : labels_(std::move(labels)), c_(std::move(c)) {
  const std::size_t n = labels_.size();
  if (c_.size() != n) throw DomainError("structure constants do not match the basis size");
  for (const auto& row : c_) {
    if (row.size() != n) throw DomainError("structure constants do not match the basis size");
    for (const auto& v : row)
      if (v.size() != n) throw DomainError("structure constants do not match the basis size");
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (c_[i][j][k] != -c_[j][i][k])
          throw DomainError("structure constants are not antisymmetric at [" + labels_[i] + ", " + labels_[j] + "]");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        Vector jac = add(add(bracket(unit_vector(n, i), bracket_basis(j, k)),
                             bracket(unit_vector(n, j), bracket_basis(k, i))),
                         bracket(unit_vector(n, k), bracket_basis(i, j)));
        if (!is_zero_vector(jac))
          throw DomainError("structure constants fail Jacobi on (" + labels_[i] + ", " + labels_[j] + ", " +
                            labels_[k] + ")");
      }
}

LieAlgebra LieAlgebra::abelian(std::vector<std::string> labels) {
  const std::size_t n = labels.size();
  return LieAlgebra(std::move(labels), StructureConstants(n, std::vector<Vector>(n, Vector(n))));
}

Vector LieAlgebra::bracket_basis(std::size_t i, std::size_t j) const { return c_.at(i).at(j); }

Vector LieAlgebra::bracket(const Vector& a, const Vector& b) const {
  const std::size_t n = dim();
  Vector out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (b[j].is_zero() || i == j) continue;
      Scalar ab = a[i] * b[j];
      for (std::size_t k = 0; k < n; ++k)
        if (!c_[i][j][k].is_zero()) out[k] += ab * c_[i][j][k];
    }
  }
  return out;
}

Matrix LieAlgebra::ad(const Vector& a) const {
  const std::size_t n = dim();
  std::vector<Vector> cols;
  for (std::size_t j = 0; j < n; ++j) cols.push_back(bracket(a, unit_vector(n, j)));
  return Matrix::from_columns(cols, n);
}

bool LieAlgebra::is_abelian() const {
  for (const auto& row : c_)
    for (const auto& v : row)
      if (!is_zero_vector(v)) return false;
  return true;
}

Subspace LieAlgebra::bracket(const Subspace& a, const Subspace& b) const {
  std::vector<Vector> span;
  for (const auto& u : a.basis())
    for (const auto& v : b.basis()) span.push_back(bracket(u, v));
  return Subspace(dim(), span);
}

Subspace LieAlgebra::derived() const { return bracket(whole(), whole()); }

Subspace LieAlgebra::center() const {
  const std::size_t n = dim();
  // z with [z, u_j] = 0 for all j: stack the ad-columns.
  Matrix m(n * n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) m(j * n + k, i) = c_[i][j][k];
  return Subspace(n, kernel(m));
}

bool LieAlgebra::is_ideal(const Subspace& s) const { return s.contains(bracket(whole(), s)); }

bool LieAlgebra::is_subalgebra(const Subspace& s) const { return s.contains(bracket(s, s)); }

LieAlgebra LieAlgebra::change_basis(const Matrix& p, std::vector<std::string> labels) const {
  const std::size_t n = dim();
  auto pinv = inverse(p);
  if (!pinv) throw DomainError("change of basis matrix is singular");
  if (labels.empty()) labels = labels_;
  StructureConstants c(n, std::vector<Vector>(n, Vector(n)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) c[i][j] = *pinv * bracket(p.column(i), p.column(j));
  return LieAlgebra(std::move(labels), std::move(c));
}

std::string LieAlgebra::str() const {
  std::ostringstream os;
  const std::size_t n = dim();
  bool any = false;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const Vector& v = c_[i][j];
      if (is_zero_vector(v)) continue;
      std::string rhs;
      for (std::size_t k = 0; k < n; ++k) {
        if (v[k].is_zero()) continue;
        bool neg = v[k].is_rational() && sgn(v[k].rational_part()) < 0;
        Scalar mag = neg ? -v[k] : v[k];
        std::string coeff = mag.is_one() ? "" : (mag.is_rational() ? mag.str() : "(" + mag.str() + ")") + "*";
        if (rhs.empty()) {
          rhs = (neg ? "-" : "") + coeff + labels_[k];
        } else {
          rhs += (neg ? " - " : " + ") + coeff + labels_[k];
        }
      }
      os << "[" << labels_[i] << ", " << labels_[j] << "] = " << rhs << "\n";
      any = true;
    }
  if (!any) os << "abelian\n";
  return os.str();
}

LieAlgebra subalgebra(const LieAlgebra& l, const Subspace& s) {
  if (!l.is_subalgebra(s)) throw DomainError("subspace is not a subalgebra");
  const std::size_t k = s.dim();
  StructureConstants c(k, std::vector<Vector>(k, Vector(k)));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) c[i][j] = s.coordinates(l.bracket(s.basis()[i], s.basis()[j]));
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < k; ++i) labels.push_back("s" + std::to_string(i + 1));
  return LieAlgebra(std::move(labels), std::move(c));
}

namespace {

Vector reduce_mod(const Subspace& m, const Vector& v) {
  Vector r = v;
  for (const auto& b : m.basis()) {
    std::size_t pivot = 0;
    while (b[pivot].is_zero()) ++pivot;
    Scalar c = r[pivot];
    if (c.is_zero()) continue;
    for (std::size_t k = 0; k < r.size(); ++k)
      if (!b[k].is_zero()) r[k] -= c * b[k];
  }
  return r;
}

}  // namespace

Vector Quotient::project(const Vector& v) const {
  Vector r = reduce_mod(ideal, v);
  Vector q;
  for (auto idx : representatives) q.push_back(r[idx]);
  return q;
}

Vector Quotient::lift(const Vector& q) const {
  Vector v(ideal.ambient_dim());
  for (std::size_t i = 0; i < representatives.size(); ++i) v[representatives[i]] = q[i];
  return v;
}

Quotient quotient(const LieAlgebra& l, const Subspace& ideal) {
  if (!l.is_ideal(ideal)) throw DomainError("subspace is not an ideal");
  const std::size_t n = l.dim();
  std::vector<bool> pivot(n, false);
  for (const auto& b : ideal.basis()) {
    std::size_t p = 0;
    while (b[p].is_zero()) ++p;
    pivot[p] = true;
  }
  std::vector<std::size_t> reps;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i)
    if (!pivot[i]) {
      reps.push_back(i);
      labels.push_back(l.labels()[i]);
    }
  const std::size_t k = reps.size();
  Quotient q{ideal, reps, LieAlgebra::abelian({})};
  StructureConstants c(k, std::vector<Vector>(k, Vector(k)));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      c[i][j] = q.project(l.bracket(unit_vector(n, reps[i]), unit_vector(n, reps[j])));
  q.algebra = LieAlgebra(std::move(labels), std::move(c));
  return q;
}

}  // namespace patlas
