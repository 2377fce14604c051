#pragma once

#include <string>
#include <vector>

#include "patlas/bracket.hpp"
#include "patlas/matrix.hpp"

namespace patlas {

/// Finite-dimensional Lie algebra given by structure constants;
/// the constructor rejects non-antisymmetric or non-Jacobi data.
class LieAlgebra {
 public:
  LieAlgebra(std::vector<std::string> labels, StructureConstants c);
  static LieAlgebra abelian(std::vector<std::string> labels);

  std::size_t dim() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const StructureConstants& constants() const { return c_; }
  /// Coordinate vector of [u_i, u_j].
  Vector bracket_basis(std::size_t i, std::size_t j) const;
  Vector bracket(const Vector& a, const Vector& b) const;
  /// Matrix of ad(a) acting on coordinate columns.
  Matrix ad(const Vector& a) const;
  bool is_abelian() const;

  /// [A, B] as a subspace.
  Subspace bracket(const Subspace& a, const Subspace& b) const;
  Subspace derived() const;
  Subspace center() const;
  Subspace whole() const { return Subspace::whole(dim()); }
  bool is_ideal(const Subspace& s) const;
  bool is_subalgebra(const Subspace& s) const;

  /// New algebra after the change of basis whose columns are p (invertible).
  LieAlgebra change_basis(const Matrix& p, std::vector<std::string> labels = {}) const;

  friend bool operator==(const LieAlgebra& l, const LieAlgebra& r) { return l.c_ == r.c_; }

  std::string str() const;

 private:
  std::vector<std::string> labels_;
  StructureConstants c_;
};

/// Restriction of the bracket to a subalgebra, in the subspace's RREF basis.
LieAlgebra subalgebra(const LieAlgebra& l, const Subspace& s);

/// L / m for an ideal m, using the standard basis vectors at the non-pivot
/// columns of m as representatives.
struct Quotient {
  Subspace ideal;
  std::vector<std::size_t> representatives;  // ambient basis indices
  LieAlgebra algebra;

  /// Quotient coordinates of an ambient vector.
  Vector project(const Vector& v) const;
  /// Ambient vector of the chosen representative of quotient coordinates.
  Vector lift(const Vector& q) const;
};

Quotient quotient(const LieAlgebra& l, const Subspace& ideal);

}  // namespace patlas
