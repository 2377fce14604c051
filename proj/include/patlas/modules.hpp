#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "patlas/bracket.hpp"
#include "patlas/classify.hpp"
#include "patlas/lie_algebra.hpp"

namespace patlas {

/// Representation of a Lie algebra by one matrix per basis element; the
/// constructor checks rho([u_i,u_j]) = [rho(u_i), rho(u_j)].
class LieRep {
 public:
  LieRep(LieAlgebra algebra, std::vector<Matrix> matrices);

  const LieAlgebra& algebra() const { return algebra_; }
  const std::vector<Matrix>& matrices() const { return matrices_; }
  std::size_t dim() const { return dim_; }
  /// rho of a coordinate vector of the algebra.
  Matrix act(const Vector& u) const;

 private:
  LieAlgebra algebra_;
  std::vector<Matrix> matrices_;
  std::size_t dim_;
};

struct Sl2Matrices {
  Matrix e, h, f;
};

/// Weight basis v_0..v_{d-1}: e v_j = j(d-j) v_{j-1}, f v_j = v_{j+1},
/// h v_j = (d-1-2j) v_j.
Sl2Matrices sl2_irrep_matrices(std::size_t d);

/// The d-dimensional simple module of an sl2-type algebra: basis elements
/// are written in (e, h, f) plus the radical, which acts as zero.
LieRep sl2_irrep(const LieAlgebra& l, std::size_t d, const Sl2Triple& triple,
                 const std::optional<Subspace>& radical = std::nullopt);

/// Finite-dimensional Poisson module annihilated by the maximal ideal of pt:
/// a.m = a(pt) m and {a, m} = sum_k da/dx_k(pt) L_k m.
class PoissonModule {
 public:
  PoissonModule(PoissonPresentation pres, Point pt, std::vector<Matrix> lie);

  const PoissonPresentation& presentation() const { return pres_; }
  const Point& point() const { return pt_; }
  const std::vector<Matrix>& generator_actions() const { return lie_; }
  std::size_t dim() const { return dim_; }

  /// Matrix of {a, -}.
  Matrix lie_action(const LaurentPoly& a) const;
  /// Scalar by which a acts associatively.
  Scalar assoc_action(const LaurentPoly& a) const;

  friend bool operator==(const PoissonModule& l, const PoissonModule& r) {
    return l.pt_ == r.pt_ && l.lie_ == r.lie_;
  }

 private:
  PoissonPresentation pres_;
  Point pt_;
  std::vector<Matrix> lie_;
  std::size_t dim_;
};

/// The dagger construction from a representation of g(J) at pt.
PoissonModule lift_module(const PoissonPresentation& pres, const Point& pt, const LieRep& n);
/// The star construction: the g(J)-module with matrices L_k.
LieRep restrict_to_lie(const PoissonModule& m);

struct AxiomReport {
  bool passed = true;
  std::size_t checks = 0;
  std::vector<std::string> violations;
};

constexpr std::uint64_t kDefaultSeed = 0x9E3779B9ULL;
constexpr int kDefaultTrials = 32;

/// Random polynomial of total degree <= 3 with coefficients in [-3, 3].
/// Uses mt19937_64 with a modulo draw so values match across platforms.
class PolySampler {
 public:
  explicit PolySampler(std::uint64_t seed);
  LaurentPoly sample(const VarSetPtr& vars);
  std::uint64_t draw(std::uint64_t bound);  // rng() % bound

 private:
  std::mt19937_64 rng_;
};

/// Axioms (i)-(iii) on all generator pairs and on `trials` sampled pairs,
/// plus: constants act as zero, products of two generators of J act as
/// zero, and {x_k, x_l - pt_l} vanishes at pt.
AxiomReport verify_poisson_axioms(const PoissonModule& m, int trials = kDefaultTrials,
                                  std::uint64_t seed = kDefaultSeed);

struct Lattice {
  std::vector<Subspace> members;  // every found submodule, by dimension
  bool complete = false;
};

/// Invariant subspaces from cyclic closures of weight vectors of the
/// grading element (or of basis vectors without one), closed under sums.
/// Complete when the grading element has one-dimensional weight spaces.
Lattice submodule_lattice(const LieRep& r, const std::optional<Vector>& grading = std::nullopt);

/// Smallest invariant subspace containing v.
Subspace cyclic_closure(const std::vector<Matrix>& mats, const Vector& v);

/// Burnside: the actions generate all d x d matrices.
bool is_simple(const LieRep& r);

struct CompositionSeries {
  std::vector<std::size_t> factor_dims;  // bottom-up
  std::vector<Subspace> chain;           // 0 < M_1 < ... < M
  bool verified = false;                 // every factor passed is_simple
};

CompositionSeries composition_series(const LieRep& r, const std::optional<Vector>& grading = std::nullopt);

struct SemisimplicityCheck {
  bool semisimple = false;
  bool decided = true;
  std::vector<Subspace> summands;  // simple summands when semisimple
  std::string witness;             // submodule without complement otherwise
};

SemisimplicityCheck is_semisimple(const LieRep& r, const std::optional<Vector>& grading = std::nullopt);

/// Invariant complement of an invariant subspace, if one exists.
std::optional<Subspace> invariant_complement(const std::vector<Matrix>& mats, const Subspace& s);

/// Matrices of the action restricted to an invariant subspace, in its basis.
std::vector<Matrix> restrict_action(const std::vector<Matrix>& mats, const Subspace& s);

/// Invertible T with a_i T = T b_i for all i, if one is found.
std::optional<Matrix> intertwiner(const std::vector<Matrix>& a, const std::vector<Matrix>& b);

/// Same point and intertwined restrictions.
bool isomorphic(const PoissonModule& l, const PoissonModule& r);

/// The twisted module: a.m = pi(a) m, {a, m} = {pi(a), m}. Requires pi
/// to be a Poisson automorphism.
PoissonModule twist(const PoissonModule& m, const SubstitutionMap& pi);

/// Restriction along a Poisson map sub -> ambient (emb sends sub variables
/// to ambient polynomials).
PoissonModule restrict_to_subalgebra(const PoissonModule& m, const SubstitutionMap& emb,
                                     const PoissonPresentation& sub);

/// Whether beta vanishes on [g(J), g(J)].
bool is_character(const LieAlgebra& l, const Vector& beta);

/// One-dimensional module with {p, v} = (sum_k beta_k dp/dx_k(pt)) v.
PoissonModule solvable_character_module(const PoissonPresentation& pres, const Point& pt, const Vector& beta);

struct ActionTable {
  std::vector<std::string> module_labels;
  /// [u_i, m_j] = image; missing entries are zero.
  struct Entry {
    std::size_t lie;
    std::size_t module;
    Vector image;
  };
  std::vector<Entry> entries;
};

/// Builds the representation from the table; throws DomainError when the
/// table is incompatible with the structure constants.
LieRep module_from_table(const LieAlgebra& l, const ActionTable& t);

/// The representation restricted to a subalgebra (basis as in subalgebra()).
LieRep restrict_rep(const LieRep& r, const Subspace& s);

}  // namespace patlas
