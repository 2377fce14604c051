#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "patlas/ideals.hpp"
#include "patlas/lie_algebra.hpp"

namespace patlas {

/// Dimensions of L, [L,L], ... until the series stabilizes (ends in 0 when
/// solvable, repeats the stable value otherwise).
std::vector<std::size_t> derived_series(const LieAlgebra& l);
bool is_solvable(const LieAlgebra& l);
/// Dimensions of L, [L,L], [L,[L,L]], ... until stable.
std::vector<std::size_t> lower_central_series(const LieAlgebra& l);
bool is_nilpotent(const LieAlgebra& l);

struct Sl2Triple {
  Vector e;
  Vector h;
  Vector f;
  std::int64_t discriminant = 0;  // extension used by the entries, 0 for Q
};

/// [h,e] = 2e, [h,f] = -2f, [e,f] = h.
bool is_sl2_triple(const LieAlgebra& l, const Sl2Triple& t);

enum class LieTag { Abelian, Heisenberg, Solvable, Sl2, Sl2Semidirect, Unrecognized };

struct LieRecognition {
  LieTag tag = LieTag::Unrecognized;
  std::vector<std::size_t> derived_dims;
  std::optional<Sl2Triple> triple;
  std::optional<Subspace> radical;
  std::vector<Scalar> radical_weights;  // ad(h) spectrum on the radical

  std::size_t radical_dim() const { return radical ? radical->dim() : 0; }
  /// "sl2", "sl2_semidirect(4)", ...
  std::string name() const;
  bool sl2_type() const { return tag == LieTag::Sl2 || tag == LieTag::Sl2Semidirect; }
};

/// Dimension of the associative algebra generated by the matrices and the
/// identity. It equals k^2 exactly when the k-dimensional module they define
/// is absolutely irreducible.
std::size_t generated_algebra_dim(const std::vector<Matrix>& gens, std::size_t k);

/// Matrices of ad(lift(q_i)) on an ideal, in the ideal's basis.
std::vector<Matrix> action_on_ideal(const LieAlgebra& l, const Subspace& ideal, const std::vector<Vector>& elements);

LieRecognition recognize(const LieAlgebra& l);

/// Triple inside L (tag sl2) or inside L lifted from L/rad (sl2_semidirect).
/// Throws UnsupportedError when a second extension is needed and
/// DomainError when no candidate works.
Sl2Triple find_sl2_triple(const LieAlgebra& l);
/// Triple search without the radical, for a 3-dimensional simple algebra.
Sl2Triple find_sl2_triple_simple(const LieAlgebra& l);

struct SimpleModuleCatalog {
  bool one_per_dimension = false;        // sl2-like
  std::size_t character_space_dim = 0;   // 1-dim characters on L/[L,L]
  std::vector<Vector> character_basis;   // functionals vanishing on [L,L]
  std::size_t annihilation_constraints = 0;  // dim [L,L]
  std::string description;
};

SimpleModuleCatalog classify_simple_modules(const LieAlgebra& l, const LieRecognition& rec);

struct IdealVerdict {
  Point point;
  LieRecognition recognition;
  std::string contribution;  // "one per dimension", "continuum at d = 1", ...
};

struct HomogeneityReport {
  std::vector<IdealVerdict> ideals;
  std::size_t t = 0;            // sl2-type ideals
  bool continuum = false;       // a character family at d = 1
  bool non_uniform = false;     // finite but dimension-dependent counts
  bool unknown = false;         // an unrecognized g(J)
  std::string counts;           // closed form in d
  std::string verdict;          // "5-homogeneous", ...
};

HomogeneityReport homogeneity_from(std::vector<IdealVerdict> ideals);

/// Per-ideal recognition of g(J); with a relation, only ideals containing it.
HomogeneityReport homogeneity_report(const PoissonPresentation& pres, const std::vector<PoissonMaxIdeal>& ideals,
                                     const std::optional<LaurentPoly>& relation = std::nullopt);

}  // namespace patlas
