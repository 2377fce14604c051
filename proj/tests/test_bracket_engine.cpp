#include <gtest/gtest.h>

#include "patlas/errors.hpp"
#include "support.hpp"

using namespace patlas;
using namespace patlas::test;

namespace {

VarSetPtr laurent_z() { return vars({"x", "y", "z"}, {false, false, true}); }

PoissonPresentation uqsl2() {
  auto v = laurent_z();
  return PoissonPresentation(BracketSpec::scaled(P(v, "2*z"), P(v, "x*y + z + z^-1")));
}

PoissonPresentation torus_table() {
  auto v = vars({"x1", "x2"}, {true, true});
  return PoissonPresentation(BracketSpec::table(v, {{{0, 1}, P(v, "x1*x2")}}));
}

// det of the Jacobian of (f, p, q) in (x, y, z), computed independently.
LaurentPoly jacobian_det(const LaurentPoly& f, const LaurentPoly& p, const LaurentPoly& q) {
  LaurentPoly m[3][3] = {{partial_derivative(f, 0), partial_derivative(f, 1), partial_derivative(f, 2)},
                         {partial_derivative(p, 0), partial_derivative(p, 1), partial_derivative(p, 2)},
                         {partial_derivative(q, 0), partial_derivative(q, 1), partial_derivative(q, 2)}};
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

std::vector<PoissonPresentation> sample_presentations() {
  auto v = xyz();
  std::vector<PoissonPresentation> out;
  out.push_back(exact(v, "z^2 - x*y"));
  out.push_back(exact(v, "x*y*z - x^2 - y^2 - z^2 + 4"));
  out.push_back(exact(v, "x*y^2 - z^2"));
  out.push_back(uqsl2());
  out.push_back(*get_entry("kirillov-kostant-sl2").presentation);
  return out;
}

}  // namespace

TEST(Bracket, ExactGeneratorBrackets) {
  auto pres = exact(xyz(), "z^2 - x*y");
  auto v = pres.vars();
  EXPECT_EQ(pres.bracket(pres.var("x"), pres.var("y")), P(v, "2*z"));
  EXPECT_EQ(pres.bracket(pres.var("y"), pres.var("z")), P(v, "-y"));
  EXPECT_EQ(pres.bracket(pres.var("z"), pres.var("x")), P(v, "-x"));
}

TEST(Bracket, ScaledBracket) {
  auto pres = uqsl2();
  auto v = pres.vars();
  EXPECT_EQ(pres.bracket(pres.var("y"), pres.var("z")), P(v, "2*z*y"));
  EXPECT_EQ(pres.bracket(pres.var("x"), pres.var("y")), P(v, "2*z - 2*z^-1"));
}

TEST(Bracket, SelfBracketVanishes) {
  PolySampler s(5);
  for (const auto& pres : sample_presentations()) {
    auto p = s.sample(pres.vars());
    EXPECT_TRUE(pres.bracket(p, p).is_zero());
  }
}

TEST(Bracket, TorusTableOnSymmetricFunctions) {
  auto pres = torus_table();
  auto v = pres.vars();
  LaurentPoly x = P(v, "x1 + x1^-1"), y = P(v, "x2 + x2^-1"), z = P(v, "x1*x2 + x1^-1*x2^-1");
  // {x1^a, x2^b} = ab x1^a x2^b
  LaurentPoly oracle = P(v, "x1*x2 - x1*x2^-1 - x1^-1*x2 + x1^-1*x2^-1");
  LaurentPoly b = pres.bracket(x, y);
  EXPECT_EQ(b, oracle);
  EXPECT_EQ(b, z * Scalar(2) - x * y);
}

TEST(Bracket, AntisymmetryAndLeibnizOnSamples) {
  PolySampler s(kDefaultSeed);
  for (const auto& pres : sample_presentations()) {
    for (int t = 0; t < 8; ++t) {
      auto a = s.sample(pres.vars()), p = s.sample(pres.vars()), q = s.sample(pres.vars());
      EXPECT_TRUE((pres.bracket(p, q) + pres.bracket(q, p)).is_zero());
      EXPECT_EQ(pres.bracket(a, p * q), pres.bracket(a, p) * q + p * pres.bracket(a, q));
    }
  }
}

TEST(Bracket, ExactMatchesJacobianDeterminant) {
  PolySampler s(17);
  auto v = xyz();
  for (const char* f : {"z^2 - x*y", "x*y*z - x^2 - y^2 - z^2 + 4", "x^2 + y^3 + z^5"}) {
    auto spec = BracketSpec::exact(P(v, f));
    for (int t = 0; t < 8; ++t) {
      auto p = s.sample(v), q = s.sample(v);
      EXPECT_EQ(bracket(spec, p, q), jacobian_det(P(v, f), p, q));
      EXPECT_EQ(bracket_by_table(spec, p, q), jacobian_det(P(v, f), p, q));
    }
  }
}

TEST(Bracket, ArityRules) {
  auto two = vars({"x", "y"});
  EXPECT_THROW(BracketSpec::exact(P(two, "x*y")), DomainError);
  EXPECT_THROW(BracketSpec::scaled(P(two, "x"), P(two, "x*y")), DomainError);
  EXPECT_THROW(BracketSpec::table(two, {{{0, 0}, P(two, "x")}}), DomainError);
}

TEST(Jacobi, PotentialBracketsPass) {
  EXPECT_TRUE(verify_jacobi(BracketSpec::exact(P(xyz(), "x*y*z - x^2 - y^2 - z^2 + 4"))).passed);
  EXPECT_TRUE(verify_jacobi(uqsl2().spec()).passed);
}

TEST(Jacobi, CorruptedTableFailsWithWitness) {
  // {x,{y,z}} + {y,{z,x}} + {z,{x,y}} = {x,x} + {y,0} + {z,y} = -x
  auto v = xyz();
  auto spec = BracketSpec::table(v, {{{0, 1}, P(v, "y")}, {{1, 2}, P(v, "x")}});
  auto j = verify_jacobi(spec);
  EXPECT_FALSE(j.passed);
  EXPECT_EQ(j.triple, (std::array<std::size_t, 3>{0, 1, 2}));
  ASSERT_TRUE(j.jacobiator);
  EXPECT_EQ(*j.jacobiator, P(v, "-x"));
  EXPECT_THROW(PoissonPresentation{spec}, DomainError);
}

TEST(Jacobi, SquareEntryTableIsStillPoisson) {
  // {x,y} = z, {z,x} = y^2: every term of the Jacobiator is a bracket of a
  // variable with a polynomial in the variables it commutes with.
  auto v = xyz();
  auto spec = BracketSpec::table(v, {{{0, 1}, P(v, "z")}, {{0, 2}, P(v, "-y^2")}});
  EXPECT_TRUE(verify_jacobi(spec).passed);
}

TEST(Jacobi, EveryCatalogBracketPasses) {
  for (const auto& name : catalog_names()) {
    auto e = get_entry(name);
    if (e.presentation) EXPECT_TRUE(verify_jacobi(e.presentation->spec()).passed) << name;
    if (e.invariants) EXPECT_TRUE(verify_jacobi(e.invariants->ambient.spec()).passed) << name;
  }
}

TEST(PoissonMap, EtaFormulas) {
  auto tgt = uqsl2();
  auto sv = laurent_z();
  PoissonPresentation equitable(BracketSpec::exact(P(sv, "2*x + 2*y + 2*z - 2*x*y*z")));
  SubstitutionMap eta(tgt.vars(), sv, {P(sv, "1 - z*y"), P(sv, "x - z^-1"), P(sv, "z")});
  EXPECT_TRUE(verify_poisson_map(eta, tgt, equitable).passed);
  SubstitutionMap back(sv, tgt.vars(), {P(tgt.vars(), "y + z^-1"), P(tgt.vars(), "z^-1*(1 - x)"), P(tgt.vars(), "z")});
  EXPECT_TRUE(verify_poisson_map(back, equitable, tgt).passed);
}

TEST(PoissonMap, IdentityAndTorusInversion) {
  for (const auto& pres : sample_presentations())
    EXPECT_TRUE(verify_poisson_map(SubstitutionMap::identity(pres.vars()), pres, pres).passed);
  auto t = torus_table();
  auto v = t.vars();
  SubstitutionMap pi(v, v, {P(v, "x1^-1"), P(v, "x2^-1")});
  EXPECT_TRUE(verify_poisson_map(pi, t, t).passed);
  SubstitutionMap bad(v, v, {P(v, "x1^-1"), P(v, "x2")});
  EXPECT_FALSE(verify_poisson_map(bad, t, t).passed);
}

TEST(Central, Examples) {
  auto v = xyz();
  auto f = P(v, "x*y*z - x^2 - y^2 - z^2 + 4");
  auto spec = BracketSpec::exact(f);
  EXPECT_TRUE(is_poisson_central(spec, f));
  EXPECT_TRUE(is_poisson_central(spec, P(v, "1")));
  EXPECT_TRUE(is_poisson_central(spec, f * f - f));
  EXPECT_FALSE(is_poisson_central(BracketSpec::exact(P(v, "z^2 - x*y")), P(v, "x")));
}

TEST(Hamiltonian, Examples) {
  auto v = xyz();
  auto spec = BracketSpec::exact(P(v, "z^2 - x*y"));
  // {z, x} = df/dy = -x and {z, y} = -df/dx = y
  EXPECT_EQ(hamiltonian(spec, P(v, "z")), (std::vector<LaurentPoly>{P(v, "-x"), P(v, "y"), P(v, "0")}));
  for (const auto& h : hamiltonian(spec, P(v, "1"))) EXPECT_TRUE(h.is_zero());
  for (const auto& h : hamiltonian(spec, P(v, "z^2 - x*y"))) EXPECT_TRUE(h.is_zero());
}

TEST(Relations, ReducesModuloSingleRelation) {
  auto v = xyz();
  auto r = P(v, "x*y - 1");
  EXPECT_TRUE(reduces_to_zero(r * P(v, "z + x"), {r}));
  EXPECT_FALSE(reduces_to_zero(P(v, "x"), {r}));
  EXPECT_TRUE(reduces_to_zero(P(v, "0"), {}));
}
