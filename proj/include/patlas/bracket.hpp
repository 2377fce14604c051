#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "patlas/polynomial.hpp"

namespace patlas {

enum class BracketKind { Exact, Scaled, Table, KirillovKostant };

const char* bracket_kind_name(BracketKind k);

/// Structure constants c[i][j][k] with [u_i, u_j] = sum_k c[i][j][k] u_k.
using StructureConstants = std::vector<std::vector<std::vector<Scalar>>>;

/// A Poisson bracket on a polynomial ring, stored as the table of
/// generator brackets b_ij = {x_i, x_j} together with its origin.
class BracketSpec {
 public:
  /// {x,y} = df/dz, {y,z} = df/dx, {z,x} = df/dy.
  static BracketSpec exact(const LaurentPoly& f);
  /// a times the exact bracket of f.
  static BracketSpec scaled(const LaurentPoly& a, const LaurentPoly& f);
  /// Entries keyed by (i, j) with i < j; missing pairs are zero.
  static BracketSpec table(VarSetPtr vars, const std::vector<std::pair<std::pair<std::size_t, std::size_t>, LaurentPoly>>& entries);
  static BracketSpec kirillov_kostant(VarSetPtr vars, const StructureConstants& c);
  static BracketSpec zero(VarSetPtr vars);

  BracketKind kind() const { return kind_; }
  const VarSetPtr& vars() const { return vars_; }
  const std::optional<LaurentPoly>& potential() const { return potential_; }
  const std::optional<LaurentPoly>& multiplier() const { return multiplier_; }
  const StructureConstants& constants() const { return constants_; }

  /// {x_i, x_j}.
  const LaurentPoly& generator_bracket(std::size_t i, std::size_t j) const { return table_[i][j]; }

 private:
  explicit BracketSpec(VarSetPtr vars);
  void fill_from_potential();

  BracketKind kind_ = BracketKind::Table;
  VarSetPtr vars_;
  std::optional<LaurentPoly> potential_;
  std::optional<LaurentPoly> multiplier_;
  StructureConstants constants_;
  std::vector<std::vector<LaurentPoly>> table_;
};

/// {p, q}. Potential brackets use the Jacobian determinant of (f, p, q);
/// the others expand through the generator table.
LaurentPoly bracket(const BracketSpec& spec, const LaurentPoly& p, const LaurentPoly& q);

/// Biderivation expansion sum_{i<j} (dp/dx_i dq/dx_j - dp/dx_j dq/dx_i) b_ij,
/// valid for every kind.
LaurentPoly bracket_by_table(const BracketSpec& spec, const LaurentPoly& p, const LaurentPoly& q);

struct JacobiCheck {
  bool passed = true;
  std::array<std::size_t, 3> triple{};
  std::optional<LaurentPoly> jacobiator;
};

/// Jacobiator on every triple of distinct generators.
JacobiCheck verify_jacobi(const BracketSpec& spec);

/// Images {a, x_k} of the generators.
std::vector<LaurentPoly> hamiltonian(const BracketSpec& spec, const LaurentPoly& a);

bool is_poisson_central(const BracketSpec& spec, const LaurentPoly& p);

/// Ring with bracket and ambient relations. Throws DomainError when the
/// bracket fails Jacobi or a relation lives in another ring.
class PoissonPresentation {
 public:
  PoissonPresentation(BracketSpec bracket, std::vector<LaurentPoly> relations = {});

  const VarSetPtr& vars() const { return bracket_.vars(); }
  const BracketSpec& spec() const { return bracket_; }
  const std::vector<LaurentPoly>& relations() const { return relations_; }

  LaurentPoly bracket(const LaurentPoly& p, const LaurentPoly& q) const { return patlas::bracket(bracket_, p, q); }
  LaurentPoly var(std::size_t i) const { return LaurentPoly::variable(vars(), i); }
  LaurentPoly var(const std::string& name) const { return LaurentPoly::variable(vars(), name); }

 private:
  BracketSpec bracket_;
  std::vector<LaurentPoly> relations_;
};

/// Ring map sending source variable i to images[i] in the target ring.
class SubstitutionMap {
 public:
  SubstitutionMap(VarSetPtr source, VarSetPtr target, std::vector<LaurentPoly> images);
  static SubstitutionMap identity(VarSetPtr vars);

  const VarSetPtr& source() const { return source_; }
  const VarSetPtr& target() const { return target_; }
  const std::vector<LaurentPoly>& images() const { return images_; }
  LaurentPoly apply(const LaurentPoly& p) const;
  /// (images[i](pt))_i for a point of the target ring.
  Point evaluate_at(const Point& target_point) const;

 private:
  VarSetPtr source_;
  VarSetPtr target_;
  std::vector<LaurentPoly> images_;
};

struct MapCheck {
  bool passed = true;
  std::string witness;  // offending pair or relation
};

/// Bracket compatibility on generator pairs and preservation of source
/// relations, each modulo a single target relation (divisibility).
MapCheck verify_poisson_map(const SubstitutionMap& map, const PoissonPresentation& source,
                            const PoissonPresentation& target);

/// Zero, or divisible by one of the relations.
bool reduces_to_zero(const LaurentPoly& p, const std::vector<LaurentPoly>& relations);

}  // namespace patlas
