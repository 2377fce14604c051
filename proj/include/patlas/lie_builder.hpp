#pragma once

#include <string>
#include <vector>

#include "patlas/bracket.hpp"
#include "patlas/lie_algebra.hpp"

namespace patlas {

/// Label of u_k = x_k - pt_k ("x" at 0, "(x-2)" or "(x+1/2)" otherwise).
std::string shifted_label(const std::string& var, const Scalar& value);

/// g(J) = J/J^2 at a Poisson point: c^k_ij is the x_k-coefficient of the
/// linear part of {x_i, x_j} at pt. Throws DomainError off Poisson points.
LieAlgebra lie_from_point(const PoissonPresentation& pres, const Point& pt);

/// Subalgebra of an ambient Poisson algebra given by generator polynomials.
struct InvariantPresentation {
  PoissonPresentation ambient;
  VarSetPtr generator_vars;  // one name per generator
  std::vector<LaurentPoly> generators;
  std::vector<SubstitutionMap> automorphisms;  // ambient -> ambient
  std::vector<LaurentPoly> relations;          // polynomials in generator_vars
  Point base;                                  // generator values; empty means 0

  /// base, or the origin when base is empty.
  Point base_point() const;
  /// Ambient polynomial obtained by substituting the generators.
  LaurentPoly expand(const LaurentPoly& p) const;
};

/// g(J) for J generated by G_k - c_k: each {G_i, G_j} is solved as a linear
/// combination of the shifted generators plus products of at least two
/// of them, bounded by the degree of the bracket. Throws DomainError when
/// a bracket escapes the span or the linear coefficients are not unique.
LieAlgebra lie_from_invariants(const InvariantPresentation& ip);

/// The bracket {G_i, G_j} as a polynomial in generator_vars, where the
/// variable y_k stands for the shifted generator G_k - c_k.
LaurentPoly generator_bracket_in_generators(const InvariantPresentation& ip, std::size_t i, std::size_t j);

struct InvarianceCheck {
  bool passed = true;
  std::vector<std::string> violations;
};

/// sigma(G_i) == G_i for every automorphism and every relation expands to 0.
InvarianceCheck verify_invariance(const InvariantPresentation& ip);

}  // namespace patlas
