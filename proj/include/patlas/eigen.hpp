#pragma once

#include <cstdint>
#include <vector>

#include "patlas/matrix.hpp"

namespace patlas {

/// Coefficients of det(t*I - m), lowest degree first; monic.
std::vector<Scalar> characteristic_polynomial(const Matrix& m);

struct Eigenpair {
  Scalar value;
  int multiplicity = 0;        // algebraic
  std::vector<Vector> vectors;  // basis of the eigenspace
};

struct Eigensystem {
  std::vector<Eigenpair> pairs;  // sorted by canonical_less on the value
  std::int64_t discriminant = 0;  // d of the extension used, 0 if none

  /// Eigenvalues repeated by algebraic multiplicity.
  std::vector<Scalar> spectrum() const;
  bool diagonalizable() const;
};

constexpr std::size_t kEigenMaxDim = 12;

/// Exact eigenvalues and eigenvectors of a square matrix of dimension at
/// most 12 whose characteristic polynomial splits over Q or one quadratic
/// extension. Anything else throws UnsupportedError.
Eigensystem eigen_small(const Matrix& m);

}  // namespace patlas
