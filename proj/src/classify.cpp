#include "patlas/classify.hpp"

#include <algorithm>
#include <deque>

#include "patlas/eigen.hpp"
#include "patlas/errors.hpp"
#include "patlas/lie_builder.hpp"

namespace patlas {

std::vector<std::size_t> derived_series(const LieAlgebra& l) {
  std::vector<std::size_t> dims{l.dim()};
  Subspace cur = l.whole();
  while (cur.dim() > 0) {
    Subspace next = l.bracket(cur, cur);
    dims.push_back(next.dim());
    if (next.dim() == cur.dim()) break;
    cur = std::move(next);
  }
  return dims;
}

bool is_solvable(const LieAlgebra& l) { return derived_series(l).back() == 0; }

std::vector<std::size_t> lower_central_series(const LieAlgebra& l) {
  std::vector<std::size_t> dims{l.dim()};
  Subspace cur = l.whole();
  while (cur.dim() > 0) {
    Subspace next = l.bracket(l.whole(), cur);
    dims.push_back(next.dim());
    if (next.dim() == cur.dim()) break;
    cur = std::move(next);
  }
  return dims;
}

bool is_nilpotent(const LieAlgebra& l) { return lower_central_series(l).back() == 0; }

bool is_sl2_triple(const LieAlgebra& l, const Sl2Triple& t) {
  return l.bracket(t.h, t.e) == scale(t.e, 2) && l.bracket(t.h, t.f) == scale(t.f, -2) && l.bracket(t.e, t.f) == t.h;
}

std::string LieRecognition::name() const {
  switch (tag) {
    case LieTag::Abelian:
      return "abelian";
    case LieTag::Heisenberg:
      return "heisenberg";
    case LieTag::Solvable:
      return "solvable";
    case LieTag::Sl2:
      return "sl2";
    case LieTag::Sl2Semidirect:
      return "sl2_semidirect(" + std::to_string(radical_dim()) + ")";
    case LieTag::Unrecognized:
      return "unrecognized";
  }
  return "?";
}

namespace {

Vector flatten(const Matrix& m) {
  Vector v;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) v.push_back(m(r, c));
  return v;
}

bool positive(const Scalar& s) {
  if (s.is_rational()) return sgn(s.rational_part()) > 0;
  if (sgn(s.rational_part()) != 0) return sgn(s.rational_part()) > 0;
  return sgn(s.irrational_part()) > 0;
}

Vector normalize_first(Vector v) {
  auto it = std::find_if(v.begin(), v.end(), [](const Scalar& s) { return !s.is_zero(); });
  if (it == v.end()) return v;
  Scalar inv = it->inverse();
  for (auto& s : v) s *= inv;
  return v;
}

std::int64_t field_of(const std::vector<const Vector*>& vs) {
  for (const auto* v : vs)
    for (const auto& s : *v)
      if (!s.is_rational()) return s.discriminant();
  return 0;
}

std::vector<Vector> triple_candidates(std::size_t n) {
  std::vector<Vector> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(unit_vector(n, i));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      out.push_back(add(unit_vector(n, i), unit_vector(n, j)));
      out.push_back(sub(unit_vector(n, i), unit_vector(n, j)));
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) out.push_back(add(unit_vector(n, i), scale(unit_vector(n, j), 2)));
  if (n == 3) out.push_back(add(add(unit_vector(3, 0), unit_vector(3, 1)), unit_vector(3, 2)));
  return out;
}

std::optional<Sl2Triple> triple_from(const LieAlgebra& l, const Vector& s) {
  const std::size_t n = l.dim();
  Eigensystem es = eigen_small(l.ad(s));
  std::optional<Scalar> lambda;
  for (const auto& p : es.pairs)
    if (!p.value.is_zero() && positive(p.value)) lambda = p.value;
  if (!lambda) return std::nullopt;
  Sl2Triple t;
  t.h = scale(s, Scalar(2) / *lambda);
  Matrix adh = l.ad(t.h);
  Matrix up = adh - Matrix::identity(n) * Scalar(2);
  Matrix down = adh + Matrix::identity(n) * Scalar(2);
  auto ke = kernel(up);
  auto kf = kernel(down);
  if (ke.size() != 1 || kf.size() != 1) return std::nullopt;
  t.e = normalize_first(ke[0]);
  t.f = normalize_first(kf[0]);
  Vector ef = l.bracket(t.e, t.f);
  std::size_t k = 0;
  while (k < n && t.h[k].is_zero()) ++k;
  if (k == n || ef[k].is_zero()) return std::nullopt;
  Scalar c = ef[k] / t.h[k];
  t.f = scale(t.f, c.inverse());
  if (!is_sl2_triple(l, t)) return std::nullopt;
  t.discriminant = field_of({&t.e, &t.h, &t.f});
  return t;
}

// A split form has a rational nilpotent e; h then solves [h, e] = 2e.
std::optional<Sl2Triple> rational_triple(const LieAlgebra& l) {
  constexpr int kBound = 2;
  for (int a = -kBound; a <= kBound; ++a)
    for (int b = -kBound; b <= kBound; ++b)
      for (int c = -kBound; c <= kBound; ++c) {
        Vector e{a, b, c};
        if (is_zero_vector(e)) continue;
        Matrix ad = l.ad(e);
        if (ad.is_zero() || !(ad * ad * ad).is_zero()) continue;
        auto h = solve_linear(ad * Scalar(-1), scale(e, 2));
        if (!h) continue;
        if (auto t = triple_from(l, *h); t && t->discriminant == 0) return t;
      }
  return std::nullopt;
}

}  // namespace

Sl2Triple find_sl2_triple_simple(const LieAlgebra& l) {
  if (l.dim() != 3) throw DomainError("triple search needs a 3-dimensional algebra");
  if (auto t = rational_triple(l)) return *t;
  for (const auto& s : triple_candidates(3)) {
    if (auto t = triple_from(l, s)) return *t;
  }
  throw DomainError("no candidate semisimple element produced an sl2-triple");
}

std::size_t generated_algebra_dim(const std::vector<Matrix>& gens, std::size_t k) {
  if (k == 0) return 0;
  Subspace span(k * k);
  std::deque<Matrix> queue;
  Matrix id = Matrix::identity(k);
  span.insert(flatten(id));
  queue.push_back(id);
  while (!queue.empty() && span.dim() < k * k) {
    Matrix x = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : gens) {
      Matrix y = x * g;
      if (span.insert(flatten(y))) queue.push_back(std::move(y));
    }
  }
  return span.dim();
}

std::vector<Matrix> action_on_ideal(const LieAlgebra& l, const Subspace& ideal, const std::vector<Vector>& elements) {
  const std::size_t r = ideal.dim();
  std::vector<Matrix> out;
  for (const auto& x : elements) {
    Matrix m(r, r);
    for (std::size_t j = 0; j < r; ++j) {
      Vector img = l.bracket(x, ideal.basis()[j]);
      Vector c = ideal.coordinates(img);
      for (std::size_t i = 0; i < r; ++i) m(i, j) = c[i];
    }
    out.push_back(std::move(m));
  }
  return out;
}

namespace {

Subspace killing_radical(const LieAlgebra& l) {
  const std::size_t n = l.dim();
  std::vector<Matrix> ads;
  for (std::size_t i = 0; i < n; ++i) ads.push_back(l.ad(unit_vector(n, i)));
  Matrix k(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Scalar t = (ads[i] * ads[j]).trace();
      k(i, j) = t;
      k(j, i) = t;
    }
  return Subspace(n, kernel(k));
}

// Lifts a triple of L/m to L by corrections in the abelian ideal m.
Sl2Triple lift_triple(const LieAlgebra& l, const Quotient& q, const Sl2Triple& t0) {
  const std::size_t n = l.dim();
  const Subspace& m = q.ideal;
  const std::size_t r = m.dim();
  Vector e0 = q.lift(t0.e), h0 = q.lift(t0.h), f0 = q.lift(t0.f);
  Matrix a(3 * n, 3 * r);
  Vector rhs(3 * n);
  // Unknown blocks: a (0..r), b (r..2r), c (2r..3r).
  for (std::size_t j = 0; j < r; ++j) {
    const Vector& mj = m.basis()[j];
    Vector h_m = l.bracket(h0, mj), e_m = l.bracket(e0, mj), f_m = l.bracket(f0, mj);
    for (std::size_t i = 0; i < n; ++i) {
      a(i, j) = h_m[i] - 2 * mj[i];
      a(i, r + j) = -e_m[i];
      a(n + i, 2 * r + j) = h_m[i] + 2 * mj[i];
      a(n + i, r + j) = -f_m[i];
      a(2 * n + i, 2 * r + j) = e_m[i];
      a(2 * n + i, j) = -f_m[i];
      a(2 * n + i, r + j) = -mj[i];
    }
  }
  Vector r1 = sub(scale(e0, 2), l.bracket(h0, e0));
  Vector r2 = sub(scale(f0, -2), l.bracket(h0, f0));
  Vector r3 = sub(h0, l.bracket(e0, f0));
  for (std::size_t i = 0; i < n; ++i) {
    rhs[i] = r1[i];
    rhs[n + i] = r2[i];
    rhs[2 * n + i] = r3[i];
  }
  auto sol = solve_linear(a, rhs);
  if (!sol) throw DomainError("sl2-triple of the quotient does not lift");
  auto combo = [&](std::size_t offset) {
    Vector v(n);
    for (std::size_t j = 0; j < r; ++j) v = add(v, scale(m.basis()[j], (*sol)[offset + j]));
    return v;
  };
  Sl2Triple t;
  t.e = add(e0, combo(0));
  t.h = add(h0, combo(r));
  t.f = add(f0, combo(2 * r));
  t.discriminant = t0.discriminant;
  if (!is_sl2_triple(l, t)) throw DomainError("lifted sl2-triple fails verification");
  return t;
}

}  // namespace

LieRecognition recognize(const LieAlgebra& l) {
  if (l.dim() > kEigenMaxDim) throw UnsupportedError("recognition is limited to dimension 12");
  LieRecognition rec;
  rec.derived_dims = derived_series(l);
  const std::size_t n = l.dim();
  if (l.is_abelian()) {
    rec.tag = LieTag::Abelian;
    return rec;
  }
  Subspace d = l.derived();
  if (n == 3 && is_nilpotent(l) && d.dim() == 1 && l.center() == d) {
    rec.tag = LieTag::Heisenberg;
    return rec;
  }
  if (d.dim() == n) {
    if (n == 3) {
      rec.tag = LieTag::Sl2;
      rec.triple = find_sl2_triple_simple(l);
      return rec;
    }
    Subspace rad = killing_radical(l);
    if (rad.dim() + 3 != n || !l.is_ideal(rad)) return rec;
    if (l.bracket(rad, rad).dim() != 0) return rec;
    Quotient q = quotient(l, rad);
    if (q.algebra.derived().dim() != 3) return rec;
    std::vector<Vector> reps;
    for (std::size_t i = 0; i < 3; ++i) reps.push_back(q.lift(unit_vector(3, i)));
    auto mats = action_on_ideal(l, rad, reps);
    if (generated_algebra_dim(mats, rad.dim()) != rad.dim() * rad.dim()) return rec;
    rec.tag = LieTag::Sl2Semidirect;
    rec.radical = rad;
    rec.triple = lift_triple(l, q, find_sl2_triple_simple(q.algebra));
    rec.radical_weights = eigen_small(action_on_ideal(l, rad, {rec.triple->h})[0]).spectrum();
    return rec;
  }
  if (rec.derived_dims.back() == 0) rec.tag = LieTag::Solvable;
  return rec;
}

Sl2Triple find_sl2_triple(const LieAlgebra& l) {
  LieRecognition rec = recognize(l);
  if (!rec.triple) throw DomainError("algebra is not of sl2 type: " + rec.name());
  return *rec.triple;
}

SimpleModuleCatalog classify_simple_modules(const LieAlgebra& l, const LieRecognition& rec) {
  SimpleModuleCatalog cat;
  if (rec.tag == LieTag::Unrecognized) throw DomainError("simple modules of an unrecognized algebra");
  if (rec.sl2_type()) {
    cat.one_per_dimension = true;
    cat.description = rec.tag == LieTag::Sl2 ? "one class in each dimension d >= 1"
                                             : "one class in each dimension d >= 1; the radical acts as zero";
    return cat;
  }
  Subspace d = l.derived();
  cat.annihilation_constraints = d.dim();
  const std::size_t n = l.dim();
  if (d.dim() == 0) {
    for (std::size_t i = 0; i < n; ++i) cat.character_basis.push_back(unit_vector(n, i));
  } else {
    cat.character_basis = kernel(Matrix::from_rows(d.basis()));
  }
  cat.character_space_dim = cat.character_basis.size();
  cat.description = "1-dimensional only: characters vanishing on [L,L], a " + std::to_string(cat.character_space_dim) +
                    "-parameter family";
  return cat;
}

HomogeneityReport homogeneity_from(std::vector<IdealVerdict> ideals) {
  HomogeneityReport rep;
  std::size_t isolated = 0;
  for (auto& v : ideals) {
    const LieRecognition& r = v.recognition;
    if (r.sl2_type()) {
      ++rep.t;
      v.contribution = "one class in every dimension d";
    } else if (r.tag == LieTag::Unrecognized) {
      rep.unknown = true;
      v.contribution = "unknown";
    } else if (r.derived_dims.front() == 0) {
      ++isolated;
      rep.non_uniform = true;
      v.contribution = "one class at d = 1";
    } else {
      rep.continuum = true;
      std::size_t k = r.derived_dims.front() - (r.derived_dims.size() > 1 ? r.derived_dims[1] : 0);
      v.contribution = "continuum at d = 1 (" + std::to_string(k) + "-parameter characters)";
    }
  }
  rep.ideals = std::move(ideals);
  const std::string t = std::to_string(rep.t);
  if (rep.unknown) {
    rep.counts = "undetermined";
    rep.verdict = "unknown";
  } else if (rep.continuum) {
    rep.counts = "count(1) = continuum, count(d) = " + t + " for d >= 2";
    rep.verdict = "not t-homogeneous (continuum of 1-dimensional classes)";
  } else if (rep.non_uniform) {
    rep.counts = "count(1) = " + std::to_string(rep.t + isolated) + ", count(d) = " + t + " for d >= 2";
    rep.verdict = "not t-homogeneous (count depends on d)";
  } else {
    rep.counts = "count(d) = " + t + " for all d >= 1";
    rep.verdict = t + "-homogeneous";
  }
  return rep;
}

HomogeneityReport homogeneity_report(const PoissonPresentation& pres, const std::vector<PoissonMaxIdeal>& ideals,
                                     const std::optional<LaurentPoly>& relation) {
  std::vector<IdealVerdict> verdicts;
  for (const auto& m : ideals) {
    if (relation && !evaluate(*relation, m.point).is_zero()) continue;
    verdicts.push_back({m.point, recognize(lie_from_point(pres, m.point)), ""});
  }
  return homogeneity_from(std::move(verdicts));
}

}  // namespace patlas
