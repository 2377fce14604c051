#include <gtest/gtest.h>

#include "patlas/eigen.hpp"
#include "patlas/errors.hpp"
#include "support.hpp"

using namespace patlas;
using namespace patlas::test;

TEST(Scalar, RationalsAreReduced) {
  Scalar s(6, -4);
  EXPECT_EQ(s.rational_part().get_num(), -3);
  EXPECT_EQ(s.rational_part().get_den(), 2);
  EXPECT_EQ(s, Scalar(-3, 2));
  EXPECT_EQ(s.str(), "-3/2");
}

TEST(Scalar, ExtensionWithZeroIrrationalPartIsRational) {
  Scalar s = Scalar::make(Rational(5, 3), Rational(0), 7);
  EXPECT_TRUE(s.is_rational());
  EXPECT_EQ(s, Scalar(5, 3));
  Scalar r = Scalar::sqrt(Scalar(2));
  EXPECT_EQ(r * r, Scalar(2));
  EXPECT_EQ((r - r), Scalar(0));
  EXPECT_TRUE((r - r).is_rational());
}

TEST(Scalar, SquareFactorsMoveOut) {
  Scalar s = Scalar::make(Rational(0), Rational(1), 12);
  EXPECT_EQ(s.discriminant(), 3);
  EXPECT_EQ(s.irrational_part(), Rational(2));
  EXPECT_EQ(Scalar::sqrt(Scalar(-4)).discriminant(), -1);
}

TEST(Scalar, MixedDiscriminantsAreRejected) {
  Scalar a = Scalar::sqrt(Scalar(2));
  Scalar b = Scalar::sqrt(Scalar(3));
  EXPECT_THROW(a + b, UnsupportedError);
  EXPECT_THROW(a * b, UnsupportedError);
}

TEST(Scalar, FieldOperations) {
  Scalar i = Scalar::sqrt(Scalar(-1));
  Scalar z = Scalar(1) + i * Scalar(2);
  EXPECT_EQ(z * z.inverse(), Scalar(1));
  EXPECT_EQ(z.norm(), Rational(5));
  EXPECT_EQ(z * z.conjugate(), Scalar(5));
  EXPECT_EQ((z / z), Scalar(1));
  EXPECT_EQ(z.str(), "1+2*sqrt(-1)");
}

TEST(Poly, ArithmeticExamples) {
  auto v = xyz();
  EXPECT_EQ((P(v, "x + y") * P(v, "x - y")), P(v, "x^2 - y^2"));
  EXPECT_EQ((P(v, "z^2 - x*y") + P(v, "x*y")), P(v, "z^2"));
  auto lv = vars({"x", "y", "z"}, {false, false, true});
  EXPECT_EQ(P(lv, "z") * P(lv, "z^-1"), P(lv, "1"));
}

TEST(Poly, NegativeExponentsNeedLaurentFlag) {
  auto v = xyz();
  EXPECT_THROW(P(v, "z^-1"), ParseError);
  EXPECT_THROW(LaurentPoly::monomial(v, {0, 0, -1}), DomainError);
}

TEST(Poly, NoZeroTermsStored) {
  auto v = xyz();
  LaurentPoly p = P(v, "x + y") - P(v, "x");
  EXPECT_EQ(p.term_count(), 1u);
  EXPECT_TRUE((p - p).is_zero());
}

TEST(Poly, PartialDerivativeExamples) {
  auto v = xyz();
  EXPECT_EQ(partial_derivative(P(v, "z^2 - x*y"), "z"), P(v, "2*z"));
  EXPECT_TRUE(partial_derivative(P(v, "x"), "y").is_zero());
  auto lv = vars({"x", "y", "z"}, {false, false, true});
  EXPECT_EQ(partial_derivative(P(lv, "z^-1"), "z"), P(lv, "-z^-2"));
}

TEST(Poly, EvaluateExamples) {
  auto v = xyz();
  LaurentPoly f = P(v, "x*y*z - x^2 - y^2 - z^2 + 4");
  EXPECT_EQ(evaluate(f, Pt(v, "(2,2,2)")), Scalar(0));
  EXPECT_EQ(evaluate(f, Pt(v, "(0,0,0)")), Scalar(4));
  EXPECT_EQ(evaluate(P(v, "7"), Pt(v, "(1/3, -5, 2)")), Scalar(7));
}

TEST(Poly, LinearPartExamples) {
  auto v = vars({"u", "v", "w"});
  auto lp = linear_part(P(v, "u*v + 2*u + 2*v - 2*w"), Pt(v, "(0,0,0)"));
  EXPECT_EQ(lp.value, Scalar(0));
  EXPECT_EQ(lp.gradient, (std::vector<Scalar>{2, 2, -2}));
  for (int n = 3; n <= 6; ++n) {
    auto z = P(xyz(), "z^" + std::to_string(n - 1));
    auto l = linear_part(z, Pt(xyz(), "(0,0,0)"));
    EXPECT_EQ(l.value, Scalar(0));
    EXPECT_EQ(l.gradient, (std::vector<Scalar>{0, 0, 0}));
  }
  auto l3 = linear_part(P(xyz(), "3*x - 5"), Pt(xyz(), "(0,0,0)"));
  EXPECT_EQ(l3.value, Scalar(-5));
  EXPECT_EQ(l3.gradient, (std::vector<Scalar>{3, 0, 0}));
}

TEST(Poly, RingAxiomsOnSamples) {
  auto v = xyz();
  PolySampler s(kDefaultSeed);
  for (int t = 0; t < 20; ++t) {
    LaurentPoly a = s.sample(v), b = s.sample(v), c = s.sample(v);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a + b) - b, a);
  }
}

TEST(Poly, LeibnizAndEvaluationHomomorphism) {
  auto v = xyz();
  PolySampler s(7);
  Point pt = Pt(v, "(1/2, -3, 2)");
  for (int t = 0; t < 20; ++t) {
    LaurentPoly p = s.sample(v), q = s.sample(v);
    for (std::size_t i = 0; i < 3; ++i)
      EXPECT_EQ(partial_derivative(p * q, i), p * partial_derivative(q, i) + q * partial_derivative(p, i));
    EXPECT_EQ(evaluate(p * q, pt), evaluate(p, pt) * evaluate(q, pt));
    EXPECT_EQ(evaluate(p + q, pt), evaluate(p, pt) + evaluate(q, pt));
  }
}

TEST(Poly, LinearPartReconstruction) {
  auto v = xyz();
  PolySampler s(11);
  Point pt = Pt(v, "(2, -1, 1/3)");
  for (int t = 0; t < 20; ++t) {
    LaurentPoly p = s.sample(v);
    auto lp = linear_part(p, pt);
    LaurentPoly rest = p - lp.value;
    for (std::size_t k = 0; k < 3; ++k) rest -= (LaurentPoly::variable(v, k) - pt[k]) * lp.gradient[k];
    EXPECT_EQ(evaluate(rest, pt), Scalar(0));
    for (std::size_t k = 0; k < 3; ++k) EXPECT_EQ(evaluate(partial_derivative(rest, k), pt), Scalar(0));
  }
}

TEST(Poly, ExpressInSpanExamples) {
  auto v = xyz();
  std::vector<LaurentPoly> basis = {P(v, "x*y"), P(v, "z")};
  auto c = express_in_span(P(v, "x*y"), basis);
  ASSERT_TRUE(c);
  EXPECT_EQ(*c, (std::vector<Scalar>{1, 0}));
  std::vector<LaurentPoly> sq = {P(v, "x^2")};
  EXPECT_FALSE(express_in_span(P(v, "x"), sq));
}

TEST(Poly, ExpressInSpanWeylBracketOfTwoRadicalGenerators) {
  // {m1, m2} in the ambient ring against products of two invariant generators
  // of matching degree, found by a brute-force linear solve.
  auto e = get_entry("weyl-a2");
  const auto& ip = *e.invariants;
  std::size_t m1 = *ip.generator_vars->index_of("m1");
  std::size_t m2 = *ip.generator_vars->index_of("m2");
  LaurentPoly target = ip.ambient.bracket(ip.generators[m1], ip.generators[m2]);
  int deg = target.total_degree();
  std::vector<LaurentPoly> basis;
  for (std::size_t i = 0; i < ip.generators.size(); ++i)
    for (std::size_t j = i; j < ip.generators.size(); ++j) {
      LaurentPoly prod = ip.generators[i] * ip.generators[j];
      if (prod.total_degree() == deg) basis.push_back(prod);
    }
  auto c = express_in_span(target, basis);
  ASSERT_TRUE(c);
  LaurentPoly back(ip.ambient.vars());
  for (std::size_t i = 0; i < basis.size(); ++i) back += basis[i] * (*c)[i];
  EXPECT_EQ(back, target);
}

TEST(Linear, SolveAndKernelExamples) {
  Matrix id = Matrix::identity(3);
  Vector b = {1, Q(2, 3), -4};
  auto x = solve_linear(id, b);
  ASSERT_TRUE(x);
  EXPECT_EQ(*x, b);
  EXPECT_EQ(kernel(Matrix(2, 2)).size(), 2u);
  Matrix m = Matrix::from_rows({{1, 2}, {2, 4}});
  EXPECT_FALSE(solve_linear(m, Vector{1, 1}));
}

TEST(Linear, KernelOfAdHOnSl2) {
  auto e = get_entry("kirillov-kostant-sl2");
  LieAlgebra l = lie_from_point(*e.presentation, Pt(e.presentation->vars(), "(0,0,0)"));
  // ad(h) from the constants by hand: columns are [h, e_j].
  std::size_t h = *e.presentation->vars()->index_of("h");
  Matrix ad(3, 3);
  for (std::size_t j = 0; j < 3; ++j)
    for (std::size_t k = 0; k < 3; ++k) ad(k, j) = l.constants()[h][j][k];
  auto ker = kernel(ad);
  ASSERT_EQ(ker.size(), 1u);
  EXPECT_EQ(Subspace(3, ker), Subspace(3, std::vector<Vector>{unit_vector(3, h)}));
}

TEST(Linear, BackSubstitutionOnSamples) {
  PolySampler s(3);
  for (int t = 0; t < 30; ++t) {
    Matrix m(3, 4);
    for (std::size_t r = 0; r < 3; ++r)
      for (std::size_t c = 0; c < 4; ++c) m(r, c) = Scalar(static_cast<long>(s.draw(7)) - 3);
    Vector b = {Scalar(static_cast<long>(s.draw(5))), 1, -2};
    if (auto x = solve_linear(m, b)) EXPECT_EQ(m * *x, b);
    for (const auto& k : kernel(m)) EXPECT_TRUE(is_zero_vector(m * k));
    EXPECT_EQ(kernel(m).size() + rank(m), 4u);
  }
}

TEST(Linear, InverseAndDeterminant) {
  Matrix m = Matrix::from_rows({{2, 1}, {5, 3}});
  EXPECT_EQ(determinant(m), Scalar(1));
  auto inv = inverse(m);
  ASSERT_TRUE(inv);
  EXPECT_EQ(m * *inv, Matrix::identity(2));
  EXPECT_FALSE(inverse(Matrix::from_rows({{1, 2}, {2, 4}})));
}

TEST(Eigen, Diagonal) {
  Matrix m = Matrix::from_rows({{2, 0, 0}, {0, 0, 0}, {0, 0, -2}});
  auto es = eigen_small(m);
  EXPECT_EQ(sorted(es.spectrum()), scalars({2, 0, -2}));
  EXPECT_TRUE(es.diagonalizable());
}

TEST(Eigen, TorusRotationNeedsSqrtMinusOne) {
  // Columns are images of (x, y, z) under ad(z): [z,x] = -2y, [z,y] = 2x.
  Matrix m = Matrix::from_rows({{0, 2, 0}, {-2, 0, 0}, {0, 0, 0}});
  EXPECT_EQ(characteristic_polynomial(m), (std::vector<Scalar>{0, 4, 0, 1}));
  auto es = eigen_small(m);
  EXPECT_EQ(es.discriminant, -1);
  Scalar i2 = Scalar::sqrt(Scalar(-4));
  EXPECT_EQ(sorted(es.spectrum()), scalars({0, i2, -i2}));
  for (const auto& p : es.pairs)
    for (const auto& v : p.vectors) EXPECT_EQ(m * v, scale(v, p.value));
}

TEST(Eigen, WeylGradingOnRadical) {
  auto e = get_entry("weyl-a2");
  LieAlgebra l = lie_from_invariants(*e.invariants);
  const auto& gv = *e.invariants->generator_vars;
  std::size_t g3 = *gv.index_of("g3");
  std::vector<std::size_t> ms = {*gv.index_of("m1"), *gv.index_of("m2"), *gv.index_of("m3"), *gv.index_of("m4")};
  Matrix ad(4, 4);
  for (std::size_t j = 0; j < 4; ++j) {
    Vector col = l.bracket_basis(g3, ms[j]);
    for (std::size_t i = 0; i < 4; ++i) ad(i, j) = col[ms[i]];
  }
  EXPECT_EQ(sorted(eigen_small(ad).spectrum()), scalars({3, -3, -1, 1}));
}

TEST(Eigen, RejectsCubicExtension) {
  Matrix m = Matrix::from_rows({{0, 0, 2}, {1, 0, 0}, {0, 1, 0}});  // t^3 - 2
  EXPECT_THROW(eigen_small(m), UnsupportedError);
}
