#include "patlas/modules.hpp"

#include <algorithm>
#include <deque>
#include <functional>

#include "patlas/eigen.hpp"
#include "patlas/errors.hpp"
#include "patlas/lie_builder.hpp"

namespace patlas {

namespace {

constexpr std::size_t kMaxLatticeMembers = 4096;
constexpr std::size_t kMaxViolations = 8;

Matrix linear_combination(const std::vector<Matrix>& mats, const Vector& c, std::size_t dim) {
  Matrix out(dim, dim);
  for (std::size_t k = 0; k < mats.size(); ++k) {
    if (!c[k].is_zero()) out += mats[k] * c[k];
  }
  return out;
}

void check_square_family(const std::vector<Matrix>& mats, std::size_t dim) {
  for (const auto& m : mats) {
    if (m.rows() != dim || m.cols() != dim) throw DomainError("action matrices must all be " + std::to_string(dim) + "x" + std::to_string(dim));
  }
}

Matrix columns_of(const std::vector<Vector>& cols, std::size_t rows) { return Matrix::from_columns(cols, rows); }

// Action on upper / lower, with upper spanned by lower's basis followed by
// complement vectors taken from upper's basis.
std::vector<Matrix> induced_action(const std::vector<Matrix>& mats, const Subspace& lower, const Subspace& upper) {
  const std::size_t n = upper.ambient_dim();
  std::vector<Vector> basis = lower.basis();
  Subspace grow = lower;
  std::vector<Vector> complement;
  for (const auto& v : upper.basis()) {
    if (grow.insert(v)) {
      basis.push_back(v);
      complement.push_back(v);
    }
  }
  const std::size_t s = lower.dim();
  const std::size_t k = complement.size();
  Matrix b = columns_of(basis, n);
  std::vector<Matrix> out;
  for (const auto& a : mats) {
    Matrix m(k, k);
    for (std::size_t j = 0; j < k; ++j) {
      auto c = solve_linear(b, a * complement[j]);
      if (!c) throw DomainError("subspace is not invariant");
      for (std::size_t i = 0; i < k; ++i) m(i, j) = (*c)[s + i];
    }
    out.push_back(std::move(m));
  }
  return out;
}

Lattice lattice_from(const std::vector<Matrix>& mats, std::size_t n, const std::optional<Matrix>& grading) {
  Lattice lat;
  Subspace zero(n);
  Subspace whole = Subspace::whole(n);
  if (n == 0) {
    lat.members = {zero};
    lat.complete = true;
    return lat;
  }
  if (generated_algebra_dim(mats, n) == n * n) {
    lat.members = {zero, whole};
    lat.complete = true;
    return lat;
  }
  std::vector<Vector> seeds;
  bool complete = false;
  if (grading) {
    try {
      Eigensystem es = eigen_small(*grading);
      complete = es.diagonalizable();
      for (const auto& p : es.pairs) {
        if (p.vectors.size() != 1) complete = false;
        for (const auto& v : p.vectors) seeds.push_back(v);
      }
    } catch (const UnsupportedError&) {
      complete = false;
    }
  }
  if (!complete) {
    for (std::size_t i = 0; i < n; ++i) seeds.push_back(unit_vector(n, i));
  }
  std::vector<Subspace> members{zero, whole};
  auto add = [&](Subspace s) {
    if (std::find(members.begin(), members.end(), s) != members.end()) return false;
    if (members.size() >= kMaxLatticeMembers) throw UnsupportedError("submodule lattice too large");
    members.push_back(std::move(s));
    return true;
  };
  for (const auto& v : seeds) add(cyclic_closure(mats, v));
  for (bool grew = true; grew;) {
    grew = false;
    const std::size_t count = members.size();
    for (std::size_t i = 0; i < count; ++i) {
      for (std::size_t j = i + 1; j < count; ++j) grew |= add(members[i].sum(members[j]));
    }
  }
  std::stable_sort(members.begin(), members.end(), [](const Subspace& l, const Subspace& r) { return l.dim() < r.dim(); });
  lat.members = std::move(members);
  lat.complete = complete;
  return lat;
}

std::string axiom_pair(const LaurentPoly& a, const LaurentPoly& b) { return "(" + a.str() + ", " + b.str() + ")"; }

}  // namespace

LieRep::LieRep(LieAlgebra algebra, std::vector<Matrix> matrices)
    : algebra_(std::move(algebra)), matrices_(std::move(matrices)) {
  if (matrices_.size() != algebra_.dim()) throw DomainError("need one matrix per basis element");
  dim_ = matrices_.empty() ? 0 : matrices_[0].rows();
  check_square_family(matrices_, dim_);
  const auto& labels = algebra_.labels();
  for (std::size_t i = 0; i < matrices_.size(); ++i) {
    for (std::size_t j = i + 1; j < matrices_.size(); ++j) {
      Matrix lhs = commutator(matrices_[i], matrices_[j]);
      Matrix rhs = linear_combination(matrices_, algebra_.bracket_basis(i, j), dim_);
      if (lhs != rhs) throw DomainError("not a representation: rho([" + labels[i] + "," + labels[j] + "]) differs from the commutator");
    }
  }
}

Matrix LieRep::act(const Vector& u) const { return linear_combination(matrices_, u, dim_); }

Sl2Matrices sl2_irrep_matrices(std::size_t d) {
  if (d == 0) throw DomainError("dimension must be positive");
  Sl2Matrices m{Matrix(d, d), Matrix(d, d), Matrix(d, d)};
  const long dd = static_cast<long>(d);
  for (long j = 0; j < dd; ++j) {
    m.h(j, j) = Scalar(dd - 1 - 2 * j);
    if (j > 0) m.e(j - 1, j) = Scalar(j * (dd - j));
    if (j + 1 < dd) m.f(j + 1, j) = Scalar(1);
  }
  return m;
}

LieRep sl2_irrep(const LieAlgebra& l, std::size_t d, const Sl2Triple& triple, const std::optional<Subspace>& radical) {
  std::vector<Vector> cols{triple.e, triple.h, triple.f};
  if (radical) {
    for (const auto& v : radical->basis()) cols.push_back(v);
  }
  if (cols.size() != l.dim()) throw DomainError("triple and radical do not span the algebra");
  auto pinv = inverse(Matrix::from_columns(cols, l.dim()));
  if (!pinv) throw DomainError("triple and radical are not independent");
  Sl2Matrices m = sl2_irrep_matrices(d);
  std::vector<Matrix> mats;
  for (std::size_t i = 0; i < l.dim(); ++i) {
    Vector c = *pinv * unit_vector(l.dim(), i);
    mats.push_back(m.e * c[0] + m.h * c[1] + m.f * c[2]);
  }
  return LieRep(l, std::move(mats));
}

PoissonModule::PoissonModule(PoissonPresentation pres, Point pt, std::vector<Matrix> lie)
    : pres_(std::move(pres)), pt_(std::move(pt)), lie_(std::move(lie)) {
  pt_.validate(*pres_.vars());
  if (lie_.size() != pres_.vars()->size()) throw DomainError("need one action matrix per variable");
  dim_ = lie_.empty() ? 0 : lie_[0].rows();
  check_square_family(lie_, dim_);
}

Matrix PoissonModule::lie_action(const LaurentPoly& a) const {
  return linear_combination(lie_, linear_part(a, pt_).gradient, dim_);
}

Scalar PoissonModule::assoc_action(const LaurentPoly& a) const { return evaluate(a, pt_); }

PoissonModule lift_module(const PoissonPresentation& pres, const Point& pt, const LieRep& n) {
  LieAlgebra g = lie_from_point(pres, pt);
  if (!(g == n.algebra())) throw DomainError("representation is not over g(J) at " + pt.str());
  return PoissonModule(pres, pt, n.matrices());
}

LieRep restrict_to_lie(const PoissonModule& m) {
  return LieRep(lie_from_point(m.presentation(), m.point()), m.generator_actions());
}

PolySampler::PolySampler(std::uint64_t seed) : rng_(seed) {}

std::uint64_t PolySampler::draw(std::uint64_t bound) { return rng_() % bound; }

LaurentPoly PolySampler::sample(const VarSetPtr& vars) {
  const std::size_t n = vars->size();
  LaurentPoly p(vars);
  if (n == 0) return p;
  const std::uint64_t terms = 1 + draw(4);
  for (std::uint64_t t = 0; t < terms; ++t) {
    Exponent e(n, 0);
    const std::uint64_t deg = draw(4);
    for (std::uint64_t u = 0; u < deg; ++u) ++e[draw(n)];
    for (std::size_t i = 0; i < n; ++i) {
      if (vars->is_laurent(i) && draw(5) == 0) --e[i];
    }
    const long c = static_cast<long>(draw(7)) - 3;
    if (c != 0) p += LaurentPoly::monomial(vars, e, Scalar(c));
  }
  return p;
}

AxiomReport verify_poisson_axioms(const PoissonModule& m, int trials, std::uint64_t seed) {
  AxiomReport rep;
  const auto& pres = m.presentation();
  const auto& vars = pres.vars();
  const auto& pt = m.point();
  const std::size_t n = vars->size();
  const std::size_t d = m.dim();
  const Matrix id = Matrix::identity(d);
  auto fail = [&](std::string what) {
    rep.passed = false;
    if (rep.violations.size() < kMaxViolations) rep.violations.push_back(std::move(what));
  };
  auto check_pair = [&](const LaurentPoly& a, const LaurentPoly& b) {
    const Matrix la = m.lie_action(a);
    const Matrix lb = m.lie_action(b);
    const LaurentPoly ab = pres.bracket(a, b);
    const Scalar av = m.assoc_action(a);
    const Scalar bv = m.assoc_action(b);
    rep.checks += 3;
    if (m.lie_action(ab) != commutator(la, lb)) fail("axiom (i) fails on " + axiom_pair(a, b));
    // {a, b.m} = {a,b}.m + b.{a,m}
    if (la * bv != id * m.assoc_action(ab) + la * bv) {
      fail("axiom (ii) fails on " + axiom_pair(a, b));
    }
    if (m.lie_action(a * b) != lb * av + la * bv) fail("axiom (iii) fails on " + axiom_pair(a, b));
  };
  std::vector<LaurentPoly> shifted;
  for (std::size_t k = 0; k < n; ++k) shifted.push_back(pres.var(k) - pt[k]);
  rep.checks += 1;
  if (!m.lie_action(LaurentPoly::constant(vars, Scalar(1))).is_zero()) fail("constants act nontrivially");
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t l = 0; l < n; ++l) {
      rep.checks += 2;
      LaurentPoly prod = shifted[k] * shifted[l];
      if (!m.lie_action(prod).is_zero() || !m.assoc_action(prod).is_zero()) {
        fail("J^2 acts nontrivially on " + prod.str());
      }
      if (!evaluate(pres.bracket(pres.var(k), shifted[l]), pt).is_zero()) {
        fail("annihilator is not Poisson: {" + vars->name(k) + ", " + shifted[l].str() + "} at " + pt.str());
      }
    }
  }
  for (const auto& r : pres.relations()) {
    rep.checks += 1;
    if (!m.assoc_action(r).is_zero() || !m.lie_action(r).is_zero()) fail("relation acts nontrivially: " + r.str());
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) check_pair(pres.var(i), pres.var(j));
  }
  PolySampler sampler(seed);
  for (int t = 0; t < trials; ++t) {
    LaurentPoly a = sampler.sample(vars);
    LaurentPoly b = sampler.sample(vars);
    check_pair(a, b);
  }
  return rep;
}

Subspace cyclic_closure(const std::vector<Matrix>& mats, const Vector& v) {
  Subspace s(v.size());
  std::deque<Vector> queue;
  if (s.insert(v)) queue.push_back(v);
  while (!queue.empty() && s.dim() < s.ambient_dim()) {
    Vector w = std::move(queue.front());
    queue.pop_front();
    for (const auto& a : mats) {
      Vector img = a * w;
      if (s.insert(img)) queue.push_back(std::move(img));
    }
  }
  return s;
}

Lattice submodule_lattice(const LieRep& r, const std::optional<Vector>& grading) {
  std::optional<Matrix> g;
  if (grading) g = r.act(*grading);
  return lattice_from(r.matrices(), r.dim(), g);
}

bool is_simple(const LieRep& r) {
  return r.dim() > 0 && generated_algebra_dim(r.matrices(), r.dim()) == r.dim() * r.dim();
}

std::vector<Matrix> restrict_action(const std::vector<Matrix>& mats, const Subspace& s) {
  return induced_action(mats, Subspace(s.ambient_dim()), s);
}

CompositionSeries composition_series(const LieRep& r, const std::optional<Vector>& grading) {
  CompositionSeries cs;
  Lattice lat = submodule_lattice(r, grading);
  Subspace current(r.dim());
  cs.chain.push_back(current);
  cs.verified = true;
  while (current.dim() < r.dim()) {
    const Subspace* next = nullptr;
    for (const auto& s : lat.members) {
      if (s.dim() > current.dim() && s.contains(current)) {
        next = &s;
        break;
      }
    }
    std::vector<Matrix> factor = induced_action(r.matrices(), current, *next);
    const std::size_t k = next->dim() - current.dim();
    if (generated_algebra_dim(factor, k) != k * k) cs.verified = false;
    cs.factor_dims.push_back(k);
    current = *next;
    cs.chain.push_back(current);
  }
  return cs;
}

std::optional<Subspace> invariant_complement(const std::vector<Matrix>& mats, const Subspace& s) {
  const std::size_t n = s.ambient_dim();
  const std::size_t k = s.dim();
  if (k == 0) return Subspace::whole(n);
  if (k == n) return Subspace(n);
  Matrix b = columns_of(s.basis(), n);
  std::vector<Matrix> rs = restrict_action(mats, s);
  // Unknown X (k x n), entry (p, q) at p*n + q, with X b = I and X a = a_s X.
  const std::size_t unknowns = k * n;
  std::vector<Vector> rows;
  Vector rhs;
  for (std::size_t p = 0; p < k; ++p) {
    for (std::size_t j = 0; j < k; ++j) {
      Vector row = zero_vector(unknowns);
      for (std::size_t q = 0; q < n; ++q) row[p * n + q] = b(q, j);
      rows.push_back(std::move(row));
      rhs.push_back(Scalar(p == j ? 1 : 0));
    }
  }
  for (std::size_t m = 0; m < mats.size(); ++m) {
    const Matrix& a = mats[m];
    const Matrix& as = rs[m];
    for (std::size_t p = 0; p < k; ++p) {
      for (std::size_t q = 0; q < n; ++q) {
        Vector row = zero_vector(unknowns);
        for (std::size_t r = 0; r < n; ++r) row[p * n + r] += a(r, q);
        for (std::size_t r = 0; r < k; ++r) row[r * n + q] -= as(p, r);
        rows.push_back(std::move(row));
        rhs.push_back(Scalar(0));
      }
    }
  }
  auto x = solve_linear(Matrix::from_rows(rows), rhs);
  if (!x) return std::nullopt;
  Matrix xm(k, n);
  for (std::size_t p = 0; p < k; ++p) {
    for (std::size_t q = 0; q < n; ++q) xm(p, q) = (*x)[p * n + q];
  }
  std::vector<Vector> ker = kernel(b * xm);
  return Subspace(n, ker);
}

SemisimplicityCheck is_semisimple(const LieRep& r, const std::optional<Vector>& grading) {
  SemisimplicityCheck out;
  out.semisimple = true;
  const std::size_t n = r.dim();
  std::function<void(const std::vector<Matrix>&, const std::optional<Matrix>&, const Matrix&)> peel;
  peel = [&](const std::vector<Matrix>& mats, const std::optional<Matrix>& g, const Matrix& emb) {
    const std::size_t k = emb.cols();
    if (k == 0 || !out.semisimple || !out.decided) return;
    auto to_ambient = [&](const Subspace& s) {
      std::vector<Vector> vs;
      for (const auto& v : s.basis()) vs.push_back(emb * v);
      return Subspace(n, vs);
    };
    Lattice lat = lattice_from(mats, k, g);
    const Subspace& s = lat.members[1];
    if (!lat.complete && generated_algebra_dim(restrict_action(mats, s), s.dim()) != s.dim() * s.dim()) {
      out.decided = false;
      return;
    }
    auto c = invariant_complement(mats, s);
    if (!c) {
      out.semisimple = false;
      std::string w;
      const Subspace amb = to_ambient(s);
      for (const auto& v : amb.basis()) w += (w.empty() ? "" : ", ") + vector_str(v);
      out.witness = "submodule span{" + w + "} has no invariant complement";
      return;
    }
    out.summands.push_back(to_ambient(s));
    std::optional<Matrix> gc;
    if (g) gc = restrict_action({*g}, *c)[0];
    peel(restrict_action(mats, *c), gc, emb * columns_of(c->basis(), k));
  };
  std::optional<Matrix> g;
  if (grading) g = r.act(*grading);
  peel(r.matrices(), g, Matrix::identity(n));
  if (!out.decided || !out.semisimple) out.summands.clear();
  if (!out.decided) out.semisimple = false;
  return out;
}

std::optional<Matrix> intertwiner(const std::vector<Matrix>& a, const std::vector<Matrix>& b) {
  if (a.size() != b.size()) return std::nullopt;
  if (a.empty()) return std::nullopt;
  const std::size_t n = a[0].rows();
  if (b[0].rows() != n) return std::nullopt;
  if (n == 0) return Matrix();
  std::vector<Vector> rows;
  for (std::size_t m = 0; m < a.size(); ++m) {
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = 0; q < n; ++q) {
        Vector row = zero_vector(n * n);
        for (std::size_t r = 0; r < n; ++r) {
          row[r * n + q] += a[m](p, r);
          row[p * n + r] -= b[m](r, q);
        }
        rows.push_back(std::move(row));
      }
    }
  }
  std::vector<Vector> sols = kernel(Matrix::from_rows(rows));
  auto as_matrix = [&](const Vector& v) {
    Matrix t(n, n);
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = 0; q < n; ++q) t(p, q) = v[p * n + q];
    }
    return t;
  };
  for (const auto& v : sols) {
    Matrix t = as_matrix(v);
    if (!determinant(t).is_zero()) return t;
  }
  for (long s = 0; s < 4 && sols.size() > 1; ++s) {
    Vector combo = zero_vector(n * n);
    for (std::size_t j = 0; j < sols.size(); ++j) {
      Scalar w(1);
      for (long e = 0; e < s; ++e) w *= Scalar(static_cast<long>(j) + 1);
      combo = add(combo, scale(sols[j], w));
    }
    Matrix t = as_matrix(combo);
    if (!determinant(t).is_zero()) return t;
  }
  return std::nullopt;
}

bool isomorphic(const PoissonModule& l, const PoissonModule& r) {
  if (!same_varset(l.presentation().vars(), r.presentation().vars())) return false;
  if (l.point() != r.point() || l.dim() != r.dim()) return false;
  if (l.dim() == 0) return true;
  return intertwiner(l.generator_actions(), r.generator_actions()).has_value();
}

PoissonModule twist(const PoissonModule& m, const SubstitutionMap& pi) {
  const auto& pres = m.presentation();
  if (!same_varset(pi.source(), pres.vars()) || !same_varset(pi.target(), pres.vars())) {
    throw DomainError("twist needs an endomorphism of the module's ring");
  }
  MapCheck mc = verify_poisson_map(pi, pres, pres);
  if (!mc.passed) throw DomainError("not a Poisson automorphism: " + mc.witness);
  std::vector<Matrix> lie;
  for (const auto& img : pi.images()) lie.push_back(m.lie_action(img));
  return PoissonModule(pres, pi.evaluate_at(m.point()), std::move(lie));
}

PoissonModule restrict_to_subalgebra(const PoissonModule& m, const SubstitutionMap& emb, const PoissonPresentation& sub) {
  if (!same_varset(emb.source(), sub.vars()) || !same_varset(emb.target(), m.presentation().vars())) {
    throw DomainError("embedding does not run from the subalgebra to the module's ring");
  }
  MapCheck mc = verify_poisson_map(emb, sub, m.presentation());
  if (!mc.passed) throw DomainError("embedding is not a Poisson map: " + mc.witness);
  std::vector<Matrix> lie;
  for (const auto& img : emb.images()) lie.push_back(m.lie_action(img));
  return PoissonModule(sub, emb.evaluate_at(m.point()), std::move(lie));
}

bool is_character(const LieAlgebra& l, const Vector& beta) {
  if (beta.size() != l.dim()) return false;
  for (std::size_t i = 0; i < l.dim(); ++i) {
    for (std::size_t j = i + 1; j < l.dim(); ++j) {
      Vector c = l.bracket_basis(i, j);
      Scalar s;
      for (std::size_t k = 0; k < c.size(); ++k) s += beta[k] * c[k];
      if (!s.is_zero()) return false;
    }
  }
  return true;
}

PoissonModule solvable_character_module(const PoissonPresentation& pres, const Point& pt, const Vector& beta) {
  LieAlgebra l = lie_from_point(pres, pt);
  if (!is_character(l, beta)) throw DomainError("functional does not vanish on [g(J), g(J)]");
  std::vector<Matrix> lie;
  for (const auto& b : beta) {
    Matrix m(1, 1);
    m(0, 0) = b;
    lie.push_back(std::move(m));
  }
  return PoissonModule(pres, pt, std::move(lie));
}

LieRep module_from_table(const LieAlgebra& l, const ActionTable& t) {
  const std::size_t d = t.module_labels.size();
  std::vector<Matrix> mats(l.dim(), Matrix(d, d));
  for (const auto& e : t.entries) {
    if (e.lie >= l.dim() || e.module >= d || e.image.size() != d) throw DomainError("action table entry out of range");
    for (std::size_t i = 0; i < d; ++i) mats[e.lie](i, e.module) = e.image[i];
  }
  try {
    return LieRep(l, std::move(mats));
  } catch (const DomainError& err) {
    throw DomainError(std::string("action table incompatible with the structure constants: ") + err.what());
  }
}

LieRep restrict_rep(const LieRep& r, const Subspace& s) {
  LieAlgebra sub = subalgebra(r.algebra(), s);
  std::vector<Matrix> mats;
  for (const auto& v : s.basis()) mats.push_back(r.act(v));
  return LieRep(sub, std::move(mats));
}

}  // namespace patlas
