#include <gtest/gtest.h>

#include "patlas/eigen.hpp"
#include "patlas/errors.hpp"
#include "support.hpp"

using namespace patlas;
using namespace patlas::test;

namespace {

PoissonPresentation kleinian_a1() { return exact(xyz(), "z^2 - x*y"); }
PoissonPresentation torus() { return exact(xyz(), "x*y*z - x^2 - y^2 - z^2 + 4"); }

PoissonModule lifted(const PoissonPresentation& pres, const Point& pt, std::size_t d) {
  LieAlgebra l = lie_from_point(pres, pt);
  auto r = recognize(l);
  return lift_module(pres, pt, sl2_irrep(l, d, *r.triple, r.radical));
}

std::vector<Scalar> spectrum(const Matrix& m) { return sorted(eigen_small(m).spectrum()); }

LieAlgebra weyl_a2() { return lie_from_invariants(*get_entry("weyl-a2").invariants); }

// The I/IJ action written out directly: lie g1 g2 g3 m1 m2 m3 m4, module r1..r5.
ActionTable iij_table() {
  auto r = [](std::size_t i, long c = 1) {
    Vector v(5);
    v[i - 1] = Scalar(c);
    return v;
  };
  ActionTable t;
  t.module_labels = {"r1", "r2", "r3", "r4", "r5"};
  const long deg[5] = {-1, 1, -2, 2, 0};
  t.entries = {{0, 0, r(2)}, {1, 1, r(1, -1)}, {3, 0, r(4)}, {4, 1, r(3, -1)}, {5, 0, r(3)}, {5, 1, r(5, -1)},
               {6, 0, r(5)}, {6, 1, r(4, -1)}, {0, 2, r(5)}, {0, 4, r(4, 2)},  {1, 3, r(5, -1)}, {1, 4, r(3, -2)}};
  for (std::size_t i = 0; i < 5; ++i)
    if (deg[i]) t.entries.push_back({2, i, r(i + 1, deg[i])});
  return t;
}

Subspace span(std::size_t n, std::initializer_list<std::size_t> idx) {
  std::vector<Vector> b;
  for (auto i : idx) b.push_back(unit_vector(n, i));
  return Subspace(n, b);
}

PoissonModule perturbed(const PoissonModule& m, std::size_t gen, std::size_t r, std::size_t c) {
  auto mats = m.generator_actions();
  mats[gen](r, c) += Scalar(1);
  return PoissonModule(m.presentation(), m.point(), mats);
}

}  // namespace

TEST(Sl2Irrep, SmallDimensions) {
  auto m1 = sl2_irrep_matrices(1);
  EXPECT_TRUE(m1.e.is_zero() && m1.h.is_zero() && m1.f.is_zero());
  auto m2 = sl2_irrep_matrices(2);
  EXPECT_EQ(m2.h, Matrix::from_rows({{1, 0}, {0, -1}}));
  EXPECT_EQ(m2.e, Matrix::from_rows({{0, 1}, {0, 0}}));
  EXPECT_EQ(m2.f, Matrix::from_rows({{0, 0}, {1, 0}}));
  auto m3 = sl2_irrep_matrices(3);
  EXPECT_EQ(m3.h, Matrix::from_rows({{2, 0, 0}, {0, 0, 0}, {0, 0, -2}}));
  Matrix casimir = m3.e * m3.f + m3.f * m3.e + m3.h * m3.h * Scalar(1, 2);
  EXPECT_EQ(casimir, Matrix::identity(3) * Scalar(4));
}

TEST(Sl2Irrep, CommutationRelations) {
  for (std::size_t d = 1; d <= 7; ++d) {
    auto m = sl2_irrep_matrices(d);
    EXPECT_EQ(commutator(m.h, m.e), m.e * Scalar(2));
    EXPECT_EQ(commutator(m.h, m.f), m.f * Scalar(-2));
    EXPECT_EQ(commutator(m.e, m.f), m.h);
    Matrix c = m.e * m.f + m.f * m.e + m.h * m.h * Scalar(1, 2);
    long dd = static_cast<long>(d);
    EXPECT_EQ(c, Matrix::identity(d) * Scalar(dd * dd - 1, 2));
  }
}

TEST(Lift, KleinianA1WeightsOfZ) {
  auto pres = kleinian_a1();
  Point o = Pt(pres.vars(), "(0,0,0)");
  for (std::size_t d = 1; d <= 6; ++d) {
    auto m = lifted(pres, o, d);
    std::vector<Scalar> want;
    for (std::size_t j = 0; j < d; ++j) want.push_back(Scalar(static_cast<long>(2 * j + 1) - static_cast<long>(d), 2));
    EXPECT_EQ(spectrum(m.lie_action(pres.var("z"))), sorted(want));
    EXPECT_TRUE(verify_poisson_axioms(m).passed);
  }
}

TEST(Lift, TrivialModule) {
  auto pres = torus();
  Point pt = Pt(pres.vars(), "(2,2,2)");
  LieAlgebra l = lie_from_point(pres, pt);
  LieRep triv(l, std::vector<Matrix>(3, Matrix(1, 1)));
  auto m = lift_module(pres, pt, triv);
  PolySampler s(2);
  for (int t = 0; t < 5; ++t) {
    auto a = s.sample(pres.vars());
    EXPECT_TRUE(m.lie_action(a).is_zero());
    EXPECT_EQ(m.assoc_action(a), evaluate(a, pt));
  }
  EXPECT_TRUE(verify_poisson_axioms(m).passed);
}

TEST(Lift, ScaledPresentationAtOne) {
  auto e = get_entry("uqsl2");
  const auto& pres = *e.presentation;
  auto m = lifted(pres, Pt(pres.vars(), "(0,0,1)"), 2);
  EXPECT_EQ(spectrum(m.lie_action(pres.var("z") - Scalar(1))), scalars({1, -1}));
}

TEST(Lift, RoundTripIsExact) {
  for (const char* name : {"kleinian-a1", "torus-so3", "laurent-inv", "uqsl2", "uqsl2-equitable", "c-theta", "d-phi"}) {
    auto e = get_entry(name);
    const auto& pres = *e.presentation;
    for (const auto& ideal : find_poisson_maximal(pres, e.box)) {
      LieAlgebra l = lie_from_point(pres, ideal.point);
      auto r = recognize(l);
      if (!r.sl2_type()) continue;
      for (std::size_t d = 1; d <= 4; ++d) {
        LieRep n = sl2_irrep(l, d, *r.triple, r.radical);
        auto m = lift_module(pres, ideal.point, n);
        EXPECT_EQ(restrict_to_lie(m).matrices(), n.matrices()) << name;
        EXPECT_EQ(lift_module(pres, ideal.point, restrict_to_lie(m)), m) << name;
      }
    }
  }
}

TEST(Lift, InsensitiveToJSquared) {
  auto pres = torus();
  Point pt = Pt(pres.vars(), "(2,-2,-2)");
  auto m = lifted(pres, pt, 3);
  std::vector<LaurentPoly> j;
  for (std::size_t k = 0; k < 3; ++k) j.push_back(pres.var(k) - pt[k]);
  PolySampler s(9);
  for (int t = 0; t < 5; ++t) {
    auto a = s.sample(pres.vars());
    for (const auto& p : j)
      for (const auto& q : j) EXPECT_EQ(m.lie_action(a + p * q), m.lie_action(a));
  }
}

TEST(Lift, LinearPartDeterminesAction) {
  auto pres = torus();
  Point pt = Pt(pres.vars(), "(-2,2,-2)");
  auto m = lifted(pres, pt, 2);
  PolySampler s(4);
  for (int t = 0; t < 5; ++t) {
    auto a = s.sample(pres.vars());
    auto lp = linear_part(a, pt);
    Matrix want(2, 2);
    for (std::size_t k = 0; k < 3; ++k) want += m.generator_actions()[k] * lp.gradient[k];
    EXPECT_EQ(m.lie_action(a), want);
  }
}

TEST(Axioms, ZeroLieActionPasses) {
  auto pres = torus();
  PoissonModule m(pres, Pt(pres.vars(), "(0,0,0)"), std::vector<Matrix>(3, Matrix(2, 2)));
  EXPECT_TRUE(verify_poisson_axioms(m).passed);
}

TEST(Axioms, PerturbationIsDetected) {
  auto pres = kleinian_a1();
  auto m = lifted(pres, Pt(pres.vars(), "(0,0,0)"), 3);
  for (std::size_t g = 0; g < 3; ++g)
    for (std::size_t r = 0; r < 3; ++r)
      for (std::size_t c = 0; c < 3; ++c) {
        auto rep = verify_poisson_axioms(perturbed(m, g, r, c));
        EXPECT_FALSE(rep.passed);
        EXPECT_FALSE(rep.violations.empty());
      }
}

TEST(Axioms, DeterministicForSeed) {
  auto pres = torus();
  auto m = perturbed(lifted(pres, Pt(pres.vars(), "(2,2,2)"), 2), 1, 0, 1);
  auto a = verify_poisson_axioms(m, 16, 99);
  auto b = verify_poisson_axioms(m, 16, 99);
  EXPECT_EQ(a.violations, b.violations);
  EXPECT_EQ(a.checks, b.checks);
}

TEST(Simplicity, IrrepsAreSimple) {
  LieAlgebra l = lie_from_point(kleinian_a1(), Pt(xyz(), "(0,0,0)"));
  auto r = recognize(l);
  for (std::size_t d = 1; d <= 6; ++d) EXPECT_TRUE(is_simple(sl2_irrep(l, d, *r.triple)));
  LieRep two_trivials(l, std::vector<Matrix>(3, Matrix(2, 2)));
  EXPECT_FALSE(is_simple(two_trivials));
}

TEST(ActionTable, MatchesDisplayedAction) {
  LieAlgebra l = weyl_a2();
  LieRep m = module_from_table(l, iij_table());
  LieRep c = module_from_table(l, *get_entry("weyl-a2").table);
  EXPECT_EQ(m.matrices(), c.matrices());
  // column j is the image of r_j
  EXPECT_EQ(m.matrices()[0](1, 0), Scalar(1));
  EXPECT_EQ(m.matrices()[0](3, 4), Scalar(2));
  EXPECT_EQ(spectrum(m.act(unit_vector(7, 2))), scalars({-2, -1, 0, 1, 2}));
}

TEST(ActionTable, ZeroTableAndMutation) {
  LieAlgebra l = weyl_a2();
  ActionTable zero;
  zero.module_labels = {"a", "b"};
  EXPECT_TRUE(is_simple(module_from_table(l, zero)) == false);
  auto bad = iij_table();
  bad.entries[0].image = unit_vector(5, 2);  // {g1, r1} = r3
  EXPECT_THROW(module_from_table(l, bad), DomainError);
}

TEST(ActionTable, SubmoduleStructure) {
  LieAlgebra l = weyl_a2();
  LieRep m = module_from_table(l, iij_table());
  Vector g3 = unit_vector(7, 2);
  EXPECT_FALSE(is_simple(m));
  auto lat = submodule_lattice(m, g3);
  ASSERT_TRUE(lat.complete);
  ASSERT_EQ(lat.members.size(), 3u);
  EXPECT_EQ(lat.members[0].dim(), 0u);
  EXPECT_EQ(lat.members[1], span(5, {2, 3, 4}));
  EXPECT_EQ(lat.members[2].dim(), 5u);
  auto cs = composition_series(m, g3);
  EXPECT_TRUE(cs.verified);
  EXPECT_EQ(cs.factor_dims, (std::vector<std::size_t>{3, 2}));
  auto ss = is_semisimple(m, g3);
  EXPECT_TRUE(ss.decided);
  EXPECT_FALSE(ss.semisimple);
  EXPECT_FALSE(invariant_complement(m.matrices(), span(5, {2, 3, 4})));
}

TEST(ActionTable, SplitsOverSl2) {
  LieAlgebra l = weyl_a2();
  LieRep m = module_from_table(l, iij_table());
  LieRep s = restrict_rep(m, span(7, {0, 1, 2}));
  auto ss = is_semisimple(s, Vector{0, 0, 1});
  ASSERT_TRUE(ss.semisimple);
  ASSERT_EQ(ss.summands.size(), 2u);
  std::vector<Subspace> want = {span(5, {2, 3, 4}), span(5, {0, 1})};
  EXPECT_TRUE((ss.summands[0] == want[0] && ss.summands[1] == want[1]) ||
              (ss.summands[0] == want[1] && ss.summands[1] == want[0]));
}

TEST(Isomorphism, SamePointAndDistinctPoints) {
  auto pres = torus();
  auto v = pres.vars();
  auto m = lifted(pres, Pt(v, "(2,2,2)"), 3);
  Matrix t = Matrix::from_rows({{1, 2, 0}, {0, 1, 0}, {3, 0, 1}});
  Matrix ti = *inverse(t);
  std::vector<Matrix> conj;
  for (const auto& a : m.generator_actions()) conj.push_back(ti * a * t);
  PoissonModule c(pres, m.point(), conj);
  EXPECT_TRUE(isomorphic(m, c));
  auto it = intertwiner(m.generator_actions(), conj);
  ASSERT_TRUE(it);
  for (std::size_t k = 0; k < 3; ++k) EXPECT_EQ(m.generator_actions()[k] * *it, *it * conj[k]);
  std::vector<Point> pts = {Pt(v, "(0,0,0)"), Pt(v, "(2,2,2)"), Pt(v, "(2,-2,-2)"), Pt(v, "(-2,2,-2)"), Pt(v, "(-2,-2,2)")};
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) EXPECT_FALSE(isomorphic(lifted(pres, pts[i], 2), lifted(pres, pts[j], 2)));
  EXPECT_FALSE(isomorphic(lifted(pres, pts[1], 2), lifted(pres, pts[1], 3)));
}

TEST(Twist, TorusThetaX) {
  auto pres = torus();
  auto v = pres.vars();
  SubstitutionMap theta(v, v, {P(v, "x"), P(v, "-y"), P(v, "-z")});
  auto m = lifted(pres, Pt(v, "(2,2,2)"), 2);
  auto t = twist(m, theta);
  EXPECT_EQ(t.point(), Pt(v, "(2,-2,-2)"));
  EXPECT_TRUE(verify_poisson_axioms(t).passed);
  EXPECT_TRUE(is_simple(restrict_to_lie(t)));
  EXPECT_TRUE(isomorphic(t, lifted(pres, Pt(v, "(2,-2,-2)"), 2)));
  EXPECT_EQ(twist(m, SubstitutionMap::identity(v)), m);
}

TEST(Twist, AnnihilatorIsPreimage) {
  auto e = get_entry("torus-so3");
  const auto& pres = *e.presentation;
  for (const auto& a : e.automorphisms)
    for (const auto& ideal : find_poisson_maximal(pres, e.box)) {
      auto m = lifted(pres, ideal.point, 2);
      auto t = twist(m, a.map);
      // pi^-1(J): the point p with pi(p) = pt; these automorphisms are involutions
      EXPECT_EQ(t.point(), a.map.evaluate_at(ideal.point));
      EXPECT_EQ(is_simple(restrict_to_lie(t)), is_simple(restrict_to_lie(m)));
    }
}

TEST(Twist, LaurentPhiSwapsIdeals) {
  auto e = get_entry("laurent-inv");
  const auto& pres = *e.presentation;
  auto v = pres.vars();
  SubstitutionMap phi(v, v, {P(v, "x"), P(v, "-y"), P(v, "-z")});
  EXPECT_EQ(twist(lifted(pres, Pt(v, "(0,0,2)"), 2), phi).point(), Pt(v, "(0,0,-2)"));
  EXPECT_EQ(twist(lifted(pres, Pt(v, "(0,0,-2)"), 2), phi).point(), Pt(v, "(0,0,2)"));
}

TEST(Restrict, KleinianFourthPowers) {
  auto v0 = xyz();
  PoissonPresentation pres(BracketSpec::exact(P(v0, "z^2 - x*y")), {P(v0, "z^2 - x*y")});
  auto s = vars({"u", "v", "w"});
  PoissonPresentation sub(BracketSpec::exact(P(s, "w^4/4 - u*v")), {P(s, "w^4/4 - u*v")});
  SubstitutionMap emb(s, pres.vars(), {P(pres.vars(), "x^2/8"), P(pres.vars(), "y^2/8"), P(pres.vars(), "z/2")});
  ASSERT_TRUE(verify_poisson_map(emb, sub, pres).passed);
  for (std::size_t d = 1; d <= 5; ++d) {
    auto r = restrict_to_subalgebra(lifted(pres, Pt(pres.vars(), "(0,0,0)"), d), emb, sub);
    EXPECT_EQ(r.point(), Pt(s, "(0,0,0)"));
    std::vector<Scalar> want;
    for (std::size_t j = 0; j < d; ++j) want.push_back(Scalar(static_cast<long>(2 * j + 1) - static_cast<long>(d), 4));
    EXPECT_EQ(spectrum(r.lie_action(sub.var("w"))), sorted(want));
    auto ss = is_semisimple(restrict_to_lie(r), unit_vector(3, 2));
    EXPECT_TRUE(ss.semisimple);
    EXPECT_EQ(ss.summands.size(), d);
  }
}

TEST(Restrict, CThetaInsideTorus) {
  auto v = xyz();
  PoissonPresentation c(BracketSpec::exact(P(v, "x*y*z - x^2 - y^2 - z^2 + 4")), {P(v, "x*y*z - x^2 - y^2 - z^2 + 4")});
  auto entry = get_entry("c-theta");
  const auto& sub = *entry.presentation;
  auto s = sub.vars();
  SubstitutionMap emb(s, v, {P(v, "x"), P(v, "y^2/2"), P(v, "y*z/2")});
  ASSERT_TRUE(verify_poisson_map(emb, sub, c).passed);
  for (std::size_t d = 1; d <= 4; ++d) {
    auto r = restrict_to_subalgebra(lifted(c, Pt(v, "(2,2,2)"), d), emb, sub);
    EXPECT_EQ(r.point(), Pt(s, "(2,2,2)"));
    EXPECT_TRUE(is_simple(restrict_to_lie(r)));
    EXPECT_TRUE(verify_poisson_axioms(r).passed);
  }
}

TEST(Restrict, IdentityEmbedding) {
  auto pres = torus();
  auto m = lifted(pres, Pt(pres.vars(), "(-2,-2,2)"), 3);
  EXPECT_EQ(restrict_to_subalgebra(m, SubstitutionMap::identity(pres.vars()), pres), m);
}

TEST(Characters, AbelianAnyPoint) {
  auto v = vars({"x1", "x2", "x3"});
  PoissonPresentation pres(BracketSpec::zero(v));
  Point alpha = Pt(v, "(1, -1/2, 3)");
  Vector beta = {2, 0, Q(-1, 3)};
  auto m = solvable_character_module(pres, alpha, beta);
  EXPECT_TRUE(verify_poisson_axioms(m).passed);
  PolySampler s(6);
  for (int t = 0; t < 5; ++t) {
    auto f = s.sample(v);
    Scalar want = 0;
    for (std::size_t i = 0; i < 3; ++i) want += beta[i] * evaluate(partial_derivative(f, i), alpha);
    EXPECT_EQ(m.lie_action(f)(0, 0), want);
  }
}

TEST(Characters, WhitneyConstraint) {
  auto pres = exact(xyz(), "x*y^2 - z^2");
  Point pt = Pt(pres.vars(), "(1,0,0)");
  LieAlgebra l = lie_from_point(pres, pt);
  EXPECT_TRUE(is_character(l, {5, 0, 0}));
  EXPECT_FALSE(is_character(l, {0, 1, 0}));
  EXPECT_FALSE(is_character(l, {0, 0, 1}));
  EXPECT_TRUE(verify_poisson_axioms(solvable_character_module(pres, pt, {Q(7, 2), 0, 0})).passed);
  Point origin = Pt(pres.vars(), "(0,0,0)");
  LieAlgebra h = lie_from_point(pres, origin);
  EXPECT_TRUE(is_character(h, {1, 1, 0}));
  EXPECT_TRUE(verify_poisson_axioms(solvable_character_module(pres, origin, {1, -2, 0})).passed);
}

TEST(Characters, KleinianTau) {
  for (int n = 3; n <= 5; ++n) {
    auto pres = exact(xyz(), "z^" + std::to_string(n) + " - x*y");
    Point o = Pt(pres.vars(), "(0,0,0)");
    LieAlgebra l = lie_from_point(pres, o);
    EXPECT_TRUE(is_character(l, {0, 0, 1}));
    EXPECT_FALSE(is_character(l, {1, 0, 0}));
    auto m = solvable_character_module(pres, o, {0, 0, Q(-5, 3)});
    EXPECT_EQ(m.lie_action(pres.var("z"))(0, 0), Q(-5, 3));
    EXPECT_TRUE(verify_poisson_axioms(m).passed);
  }
}
