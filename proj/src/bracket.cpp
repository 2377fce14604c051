#include "patlas/bracket.hpp"

#include "patlas/errors.hpp"

namespace patlas {

const char* bracket_kind_name(BracketKind k) {
  switch (k) {
    case BracketKind::Exact:
      return "exact";
    case BracketKind::Scaled:
      return "scaled";
    case BracketKind::Table:
      return "table";
    case BracketKind::KirillovKostant:
      return "kirillov-kostant";
  }
  return "?";
}

BracketSpec::BracketSpec(VarSetPtr vars) : vars_(std::move(vars)) {
  const std::size_t n = vars_->size();
  table_.assign(n, std::vector<LaurentPoly>(n, LaurentPoly(vars_)));
}

void BracketSpec::fill_from_potential() {
  const LaurentPoly& f = *potential_;
  LaurentPoly fx = partial_derivative(f, 0);
  LaurentPoly fy = partial_derivative(f, 1);
  LaurentPoly fz = partial_derivative(f, 2);
  if (multiplier_) {
    fx *= *multiplier_;
    fy *= *multiplier_;
    fz *= *multiplier_;
  }
  table_[0][1] = fz;
  table_[1][0] = -fz;
  table_[1][2] = fx;
  table_[2][1] = -fx;
  table_[2][0] = fy;
  table_[0][2] = -fy;
}

BracketSpec BracketSpec::exact(const LaurentPoly& f) {
  if (f.vars()->size() != 3) throw DomainError("an exact bracket needs exactly 3 variables");
  BracketSpec s(f.vars());
  s.kind_ = BracketKind::Exact;
  s.potential_ = f;
  s.fill_from_potential();
  return s;
}

BracketSpec BracketSpec::scaled(const LaurentPoly& a, const LaurentPoly& f) {
  if (f.vars()->size() != 3) throw DomainError("a scaled bracket needs exactly 3 variables");
  if (!same_varset(a.vars(), f.vars())) throw DomainError("multiplier and potential over different rings");
  BracketSpec s(f.vars());
  s.kind_ = BracketKind::Scaled;
  s.potential_ = f;
  s.multiplier_ = a;
  s.fill_from_potential();
  return s;
}

BracketSpec BracketSpec::table(
    VarSetPtr vars, const std::vector<std::pair<std::pair<std::size_t, std::size_t>, LaurentPoly>>& entries) {
  BracketSpec s(vars);
  s.kind_ = BracketKind::Table;
  std::vector<std::vector<bool>> seen(vars->size(), std::vector<bool>(vars->size(), false));
  for (const auto& [ij, p] : entries) {
    auto [i, j] = ij;
    if (i >= vars->size() || j >= vars->size()) throw DomainError("bracket table index out of range");
    if (i == j) {
      if (!p.is_zero()) throw DomainError("bracket table has a nonzero diagonal entry");
      continue;
    }
    if (!same_varset(p.vars(), vars)) throw DomainError("bracket table entry over a different ring");
    if (seen[i][j]) throw DomainError("bracket table entry given twice");
    seen[i][j] = seen[j][i] = true;
    s.table_[i][j] = p;
    s.table_[j][i] = -p;
  }
  return s;
}

BracketSpec BracketSpec::kirillov_kostant(VarSetPtr vars, const StructureConstants& c) {
  const std::size_t n = vars->size();
  if (c.size() != n) throw DomainError("structure constants do not match the variables");
  BracketSpec s(vars);
  s.kind_ = BracketKind::KirillovKostant;
  s.constants_ = c;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      LaurentPoly b(vars);
      for (std::size_t k = 0; k < n; ++k)
        if (!c[i][j][k].is_zero()) b += LaurentPoly::variable(vars, k) * c[i][j][k];
      s.table_[i][j] = b;
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (s.table_[i][j] != -s.table_[j][i]) throw DomainError("structure constants are not antisymmetric");
  return s;
}

BracketSpec BracketSpec::zero(VarSetPtr vars) { return table(std::move(vars), {}); }

LaurentPoly bracket_by_table(const BracketSpec& spec, const LaurentPoly& p, const LaurentPoly& q) {
  const std::size_t n = spec.vars()->size();
  std::vector<LaurentPoly> dp;
  std::vector<LaurentPoly> dq;
  for (std::size_t i = 0; i < n; ++i) {
    dp.push_back(partial_derivative(p, i));
    dq.push_back(partial_derivative(q, i));
  }
  LaurentPoly out(spec.vars());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const LaurentPoly& b = spec.generator_bracket(i, j);
      if (b.is_zero()) continue;
      LaurentPoly w = dp[i] * dq[j] - dp[j] * dq[i];
      if (!w.is_zero()) out += w * b;
    }
  return out;
}

LaurentPoly bracket(const BracketSpec& spec, const LaurentPoly& p, const LaurentPoly& q) {
  if (!same_varset(p.vars(), spec.vars()) || !same_varset(q.vars(), spec.vars()))
    throw DomainError("bracket of elements outside the presentation's ring");
  if (spec.kind() != BracketKind::Exact && spec.kind() != BracketKind::Scaled) return bracket_by_table(spec, p, q);
  const LaurentPoly& f = *spec.potential();
  LaurentPoly f1 = partial_derivative(f, 0), f2 = partial_derivative(f, 1), f3 = partial_derivative(f, 2);
  LaurentPoly p1 = partial_derivative(p, 0), p2 = partial_derivative(p, 1), p3 = partial_derivative(p, 2);
  LaurentPoly q1 = partial_derivative(q, 0), q2 = partial_derivative(q, 1), q3 = partial_derivative(q, 2);
  LaurentPoly det = f1 * (p2 * q3 - p3 * q2) - f2 * (p1 * q3 - p3 * q1) + f3 * (p1 * q2 - p2 * q1);
  if (spec.multiplier()) det *= *spec.multiplier();
  return det;
}

JacobiCheck verify_jacobi(const BracketSpec& spec) {
  JacobiCheck out;
  const std::size_t n = spec.vars()->size();
  std::vector<LaurentPoly> x;
  for (std::size_t i = 0; i < n; ++i) x.push_back(LaurentPoly::variable(spec.vars(), i));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        LaurentPoly jac = bracket(spec, x[i], spec.generator_bracket(j, k)) +
                          bracket(spec, x[j], spec.generator_bracket(k, i)) +
                          bracket(spec, x[k], spec.generator_bracket(i, j));
        if (!jac.is_zero()) {
          out.passed = false;
          out.triple = {i, j, k};
          out.jacobiator = jac;
          return out;
        }
      }
  return out;
}

std::vector<LaurentPoly> hamiltonian(const BracketSpec& spec, const LaurentPoly& a) {
  std::vector<LaurentPoly> out;
  for (std::size_t k = 0; k < spec.vars()->size(); ++k)
    out.push_back(bracket(spec, a, LaurentPoly::variable(spec.vars(), k)));
  return out;
}

bool is_poisson_central(const BracketSpec& spec, const LaurentPoly& p) {
  for (const auto& h : hamiltonian(spec, p))
    if (!h.is_zero()) return false;
  return true;
}

PoissonPresentation::PoissonPresentation(BracketSpec bracket, std::vector<LaurentPoly> relations)
    : bracket_(std::move(bracket)), relations_(std::move(relations)) {
  for (const auto& r : relations_)
    if (!same_varset(r.vars(), bracket_.vars())) throw DomainError("relation over a different ring");
  JacobiCheck j = verify_jacobi(bracket_);
  if (!j.passed) {
    const VarSet& v = *bracket_.vars();
    throw DomainError("bracket fails the Jacobi identity on (" + v.name(j.triple[0]) + ", " + v.name(j.triple[1]) +
                      ", " + v.name(j.triple[2]) + "): " + j.jacobiator->str());
  }
}

SubstitutionMap::SubstitutionMap(VarSetPtr source, VarSetPtr target, std::vector<LaurentPoly> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
  if (images_.size() != source_->size()) throw DomainError("substitution needs one image per source variable");
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (!same_varset(images_[i].vars(), target_)) throw DomainError("substitution image over a different ring");
    if (source_->is_laurent(i) && !images_[i].is_unit_monomial())
      throw DomainError("image of invertible variable '" + source_->name(i) + "' is not a unit");
  }
}

SubstitutionMap SubstitutionMap::identity(VarSetPtr vars) {
  std::vector<LaurentPoly> images;
  for (std::size_t i = 0; i < vars->size(); ++i) images.push_back(LaurentPoly::variable(vars, i));
  return SubstitutionMap(vars, vars, std::move(images));
}

LaurentPoly SubstitutionMap::apply(const LaurentPoly& p) const {
  if (!same_varset(p.vars(), source_)) throw DomainError("substitution applied outside its source ring");
  return substitute(p, images_, target_);
}

Point SubstitutionMap::evaluate_at(const Point& target_point) const {
  std::vector<Scalar> coords;
  for (const auto& img : images_) coords.push_back(evaluate(img, target_point));
  return Point(std::move(coords));
}

bool reduces_to_zero(const LaurentPoly& p, const std::vector<LaurentPoly>& relations) {
  if (p.is_zero()) return true;
  for (const auto& r : relations)
    if (!r.is_zero() && divides(r, p)) return true;
  return false;
}

MapCheck verify_poisson_map(const SubstitutionMap& map, const PoissonPresentation& source,
                            const PoissonPresentation& target) {
  if (!same_varset(map.source(), source.vars()) || !same_varset(map.target(), target.vars()))
    throw DomainError("map does not match the presentations");
  MapCheck out;
  const VarSet& sv = *source.vars();
  const auto& img = map.images();
  for (std::size_t i = 0; i < sv.size(); ++i)
    for (std::size_t j = i + 1; j < sv.size(); ++j) {
      LaurentPoly lhs = map.apply(source.spec().generator_bracket(i, j));
      LaurentPoly rhs = target.bracket(img[i], img[j]);
      if (!reduces_to_zero(lhs - rhs, target.relations())) {
        out.passed = false;
        out.witness = "{" + sv.name(i) + ", " + sv.name(j) + "}: " + (lhs - rhs).str();
        return out;
      }
    }
  for (const auto& r : source.relations()) {
    LaurentPoly image = map.apply(r);
    if (!reduces_to_zero(image, target.relations())) {
      out.passed = false;
      out.witness = "relation " + r.str() + " maps to " + image.str();
      return out;
    }
  }
  return out;
}

}  // namespace patlas
