#include <algorithm>
#include <functional>
#include <map>
#include <regex>

#include "patlas/catalog.hpp"
#include "patlas/eigen.hpp"
#include "patlas/errors.hpp"
#include "patlas/parser.hpp"

namespace patlas {

namespace {

VarSetPtr vars_of(std::vector<std::string> names, std::vector<bool> laurent = {}) {
  return make_varset(std::move(names), std::move(laurent));
}

LaurentPoly P(const VarSetPtr& v, std::string_view text) { return parse_polynomial(v, text); }
Point Pt(const VarSetPtr& v, std::string_view text) { return parse_point(v, text); }

SubstitutionMap smap(const VarSetPtr& src, const VarSetPtr& tgt, const std::vector<std::string>& images) {
  std::vector<LaurentPoly> im;
  for (const auto& s : images) im.push_back(P(tgt, s));
  return SubstitutionMap(src, tgt, std::move(im));
}

PoissonPresentation exact(const VarSetPtr& v, std::string_view f, bool with_relation = false) {
  LaurentPoly p = P(v, f);
  return PoissonPresentation(BracketSpec::exact(p), with_relation ? std::vector<LaurentPoly>{p} : std::vector<LaurentPoly>{});
}

PoissonPresentation table(const VarSetPtr& v, const std::map<std::pair<std::string, std::string>, std::string>& entries) {
  std::vector<std::pair<std::pair<std::size_t, std::size_t>, LaurentPoly>> t;
  for (const auto& [k, e] : entries) t.push_back({{*v->index_of(k.first), *v->index_of(k.second)}, P(v, e)});
  return PoissonPresentation(BracketSpec::table(v, t));
}

std::vector<Scalar> sorted_spectrum(const Matrix& m) {
  std::vector<Scalar> s = eigen_small(m).spectrum();
  std::sort(s.begin(), s.end(), canonical_less);
  return s;
}

std::vector<Scalar> sorted(std::vector<Scalar> s) {
  std::sort(s.begin(), s.end(), canonical_less);
  return s;
}

std::string scalars_str(const std::vector<Scalar>& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? ", " : "") + s[i].str();
  return out + "}";
}

LieRep irrep_at(const PoissonPresentation& pres, const Point& pt, std::size_t d) {
  LieAlgebra l = lie_from_point(pres, pt);
  LieRecognition r = recognize(l);
  if (!r.triple) throw DomainError("no sl2 triple at " + pt.str());
  return sl2_irrep(l, d, *r.triple, r.radical);
}

PoissonModule lifted(const PoissonPresentation& pres, const Point& pt, std::size_t d) {
  return lift_module(pres, pt, irrep_at(pres, pt, d));
}

ConstantFact cf(std::size_t i, std::size_t j, Vector v, std::string cite) { return {i, j, std::move(v), std::move(cite)}; }

Vector vec(std::size_t n, std::initializer_list<std::pair<std::size_t, Scalar>> entries) {
  Vector v = zero_vector(n);
  for (const auto& [i, c] : entries) v[i] = c;
  return v;
}

// Ideal is unique by the invariant argument; the verdict follows from its g(J).
void single_ideal_homogeneity(const LieAlgebra& l, const Point& pt, const std::string& verdict, const std::string& cite,
                              FactLog& log) {
  HomogeneityReport rep = homogeneity_from({IdealVerdict{pt, recognize(l), {}}});
  log.check("homogeneity: " + verdict, cite, rep.verdict == verdict, rep.verdict + "; " + rep.counts);
}

// ---------------------------------------------------------------- Kleinian A1

PoissonPresentation kleinian_pres(int n, bool with_relation = false) {
  VarSetPtr v = vars_of({"x", "y", "z"});
  return exact(v, "z^" + std::to_string(n) + " - x*y", with_relation);
}

PoissonPresentation weyl_plane() {
  VarSetPtr b = vars_of({"x1", "x2"});
  return table(b, {{{"x1", "x2"}, "1"}});
}

InvariantPresentation kleinian_invariants(int n) {
  PoissonPresentation b = weyl_plane();
  VarSetPtr g = vars_of({"x", "y", "z"});
  // a^2 = n^n
  static const std::map<int, std::string> inv_a = {{2, "1/2"}, {3, "sqrt(3)/9"}, {4, "1/16"}, {5, "sqrt(5)/125"}};
  auto it = inv_a.find(n);
  if (it == inv_a.end()) throw UnsupportedError("kleinian-an(n) is sampled for n in 2..5");
  const std::string n_str = std::to_string(n);
  std::vector<LaurentPoly> gens = {P(b.vars(), it->second + "*x1^" + n_str), P(b.vars(), it->second + "*x2^" + n_str),
                                   P(b.vars(), "x1*x2/" + n_str)};
  std::vector<SubstitutionMap> autos;
  if (n == 2) autos.push_back(smap(b.vars(), b.vars(), {"-x1", "-x2"}));
  if (n == 4) autos.push_back(smap(b.vars(), b.vars(), {"sqrt(-1)*x1", "-sqrt(-1)*x2"}));
  return InvariantPresentation{b, g, gens, autos, {P(g, "x*y - z^" + n_str)}, {}};
}

CatalogEntry kleinian_a1() {
  CatalogEntry e;
  e.name = "kleinian-a1";
  e.citation = "The Kleinian singularity of type A_1";
  e.summary = "Exact bracket of z^2 - xy, the Kirillov-Kostant bracket of sl2 in disguise.";
  e.presentation = kleinian_pres(2);
  e.invariants = kleinian_invariants(2);
  e.grading = "z";
  VarSetPtr v = e.presentation->vars();
  e.expected.ideals = std::vector<Point>{Pt(v, "(0,0,0)")};
  e.expected.ideals_citation = "There is a unique Poisson maximal ideal, J := (x, y, z)";
  e.expected.recognitions = {{Pt(v, "(0,0,0)"), "sl2", "g(J) is isomorphic to sl_2"}};
  const std::string hcite = "the Poisson algebras A and A_0 are both 1-homogeneous";
  e.expected.homogeneity = {{"", {}, "1-homogeneous", hcite}, {"f", P(v, "z^2 - x*y"), "1-homogeneous", hcite}};
  const std::string ccite = "{x, y} = 2z, {y, z} = -y and {z, x} = -x";
  e.expected.constants = {cf(0, 1, {0, 0, 2}, ccite), cf(1, 2, {0, -1, 0}, ccite), cf(2, 0, {-1, 0, 0}, ccite)};
  e.expected.invariant_recognition = "sl2";
  e.expected.invariant_recognition_citation = "B^π may be identified with A_0";
  e.procedure = [](const CatalogEntry& en, const RunOptions& o, FactLog& log) {
    const PoissonPresentation& pres = *en.presentation;
    Point origin = Pt(pres.vars(), "(0,0,0)");
    LaurentPoly z = pres.var("z");
    bool axioms = true;
    bool spectra = true;
    std::string detail;
    for (std::size_t d = 1; d <= std::max<std::size_t>(6, o.max_dim); ++d) {
      PoissonModule m = lifted(pres, origin, d);
      axioms &= verify_poisson_axioms(m, o.trials, o.seed).passed;
      std::vector<Scalar> want;
      for (std::size_t j = 0; j < d; ++j) want.push_back(Scalar(static_cast<long>(2 * j + 1 - d), 2));
      std::vector<Scalar> got = sorted_spectrum(m.lie_action(z));
      if (got != sorted(want)) {
        spectra = false;
        detail = "d = " + std::to_string(d) + ": " + scalars_str(got);
      }
    }
    log.check("lifted modules for d <= 6 satisfy the Poisson module axioms", "N† = ᶠN as a Lie module over A", axioms);
    log.check("{z, -} has eigenvalues (2j+1-d)/2 for d <= 6", "{z, v_j}_M = (2j+1-d)v_j/2", spectra, detail);
  };
  return e;
}

// ---------------------------------------------------------------- torus

PoissonPresentation torus_pres(bool with_relation = false) {
  return exact(vars_of({"x", "y", "z"}), "x*y*z - x^2 - y^2 - z^2 + 4", with_relation);
}

CatalogEntry torus_so3() {
  CatalogEntry e;
  e.name = "torus-so3";
  e.citation = "Invariants of the 2-torus";
  e.summary = "Exact bracket of xyz - x^2 - y^2 - z^2 + 4, the invariants of the torus under inversion.";
  e.presentation = torus_pres();
  VarSetPtr v = e.presentation->vars();
  e.grading = "z";
  std::vector<Point> pts;
  for (const char* s : {"(0,0,0)", "(2,2,2)", "(2,-2,-2)", "(-2,2,-2)", "(-2,-2,2)"}) pts.push_back(Pt(v, s));
  e.expected.ideals = pts;
  e.expected.ideals_citation = "There are five Poisson maximal ideals in A";
  for (const auto& p : pts) e.expected.recognitions.push_back({p, "sl2", p == pts[0] ? "Consequently g(J_1) ≃ sl_2" : "it follows that g(J) ≃ sl_2"});
  const std::string hcite = "Thus A is 5-homogeneous and A_0 is 4-homogeneous";
  e.expected.homogeneity = {{"", {}, "5-homogeneous", hcite},
                            {"f", P(v, "x*y*z - x^2 - y^2 - z^2 + 4"), "4-homogeneous", hcite},
                            {"f - 4", P(v, "x*y*z - x^2 - y^2 - z^2"), "1-homogeneous", "A_4 is 1-homogeneous"}};
  e.automorphisms = {{"theta_x", smap(v, v, {"x", "-y", "-z"})},
                     {"theta_y", smap(v, v, {"-x", "y", "-z"})},
                     {"theta_z", smap(v, v, {"-x", "-y", "z"})}};
  VarSetPtr b = vars_of({"x1", "x2"}, {true, true});
  PoissonPresentation torus = table(b, {{{"x1", "x2"}, "x1*x2"}});
  e.invariants = InvariantPresentation{torus,
                                       v,
                                       {P(b, "x1 + x1^-1"), P(b, "x2 + x2^-1"), P(b, "x1*x2 + x1^-1*x2^-1")},
                                       {smap(b, b, {"x1^-1", "x2^-1"})},
                                       {P(v, "x*y*z - x^2 - y^2 - z^2 + 4")},
                                       Pt(v, "(2,2,2)")};
  e.expected.invariant_bracket_negated = true;
  e.expected.invariant_recognition = "sl2";
  e.expected.invariant_recognition_citation = "from which it follows that g(J) ≃ sl_2";
  e.procedure = [](const CatalogEntry& en, const RunOptions& o, FactLog& log) {
    const PoissonPresentation& pres = *en.presentation;
    VarSetPtr v = pres.vars();
    LaurentPoly x = pres.var("x"), y = pres.var("y"), z = pres.var("z");
    const char* bcite = "{x, y} = xy - 2z, {y, z} = yz - 2x and {z, x} = zx - 2y";
    log.check("bracket {x, y} = xy - 2z", bcite, pres.bracket(x, y) == x * y - z * Scalar(2));
    log.check("bracket {y, z} = yz - 2x", bcite, pres.bracket(y, z) == y * z - x * Scalar(2));
    log.check("bracket {z, x} = zx - 2y", bcite, pres.bracket(z, x) == z * x - y * Scalar(2));
    LieAlgebra l1 = lie_from_point(pres, Pt(v, "(0,0,0)"));
    const char* c1 = "[y, x] = 2z, [z, y] = 2x, [x, z] = 2y";
    log.check("g(J_1) displayed constants", c1,
              l1.bracket_basis(1, 0) == Vector{0, 0, 2} && l1.bracket_basis(2, 1) == Vector{2, 0, 0} &&
                  l1.bracket_basis(0, 2) == Vector{0, 2, 0});
    LieAlgebra l2 = lie_from_point(pres, Pt(v, "(2,2,2)"));
    const char* c2 = "[u, v] = 2u + 2v - 2w, [v, w] = -2u + 2v + 2w, [w, u] = 2u - 2v + 2w";
    log.check("g(J_2) displayed constants", c2,
              l2.bracket_basis(0, 1) == Vector{2, 2, -2} && l2.bracket_basis(1, 2) == Vector{-2, 2, 2} &&
                  l2.bracket_basis(2, 0) == Vector{2, -2, 2});
    log.note("sign of the induced bracket", "{x, y} = xy - 2z",
             "with {x_1, x_2} = x_1x_2 the invariants satisfy {x, y} = 2z - xy, the opposite of {-,-}_f; "
             "x -> -x is an isomorphism between a Lie algebra and its opposite, so g(J) is unchanged");
    LeafReport leaves = leaf_report(pres, en.box);
    std::vector<Scalar> levels;
    for (const auto& s : leaves.levels) levels.push_back(s.lambda);
    log.check("singular levels are 0 and 4", "All but two of the surfaces S_λ are smooth",
              levels == std::vector<Scalar>{0, 4}, scalars_str(levels));
    log.check("(1,1,1) is not Poisson maximal", "There are five Poisson maximal ideals in A",
              !is_poisson_maximal(pres, Pt(v, "(1,1,1)")));
    PoissonModule m = lifted(pres, Pt(v, "(2,2,2)"), 2);
    PoissonModule t = twist(m, en.automorphisms[0].map);
    log.check("twisting the J_2 module by theta_x gives the J_3 module", "As J_3 = θ_x(J_2)",
              t.point() == Pt(v, "(2,-2,-2)") && isomorphic(t, lifted(pres, Pt(v, "(2,-2,-2)"), 2)), t.point().str());
    (void)o;
  };
  return e;
}

// ---------------------------------------------------------------- Laurent invariants

CatalogEntry laurent_inv() {
  CatalogEntry e;
  e.name = "laurent-inv";
  e.citation = "Invariants of C[x_1^{±1}, x_2]";
  e.summary = "Exact bracket of x(4 - z^2) + y^2 from the solvable plane localized at x1.";
  VarSetPtr v = vars_of({"x", "y", "z"});
  e.presentation = exact(v, "x*(4 - z^2) + y^2");
  e.grading = "y";
  std::vector<Point> pts = {Pt(v, "(0,0,-2)"), Pt(v, "(0,0,2)")};
  e.expected.ideals = pts;
  e.expected.ideals_citation = "There are two Poisson maximal ideals in A";
  for (const auto& p : pts) e.expected.recognitions.push_back({p, "sl2", "Hence g(J_1) ≃ sl_2"});
  const std::string hcite = "A and A_0 are 2-homogeneous";
  e.expected.homogeneity = {{"", {}, "2-homogeneous", hcite}, {"f", P(v, "x*(4 - z^2) + y^2"), "2-homogeneous", hcite}};
  e.automorphisms = {{"phi", smap(v, v, {"x", "-y", "-z"})}};
  VarSetPtr b = vars_of({"x1", "x2"}, {true, false});
  PoissonPresentation plane = table(b, {{{"x1", "x2"}, "x1"}});
  e.invariants = InvariantPresentation{plane,
                                       v,
                                       {P(b, "x2^2"), P(b, "x2*(x1 - x1^-1)"), P(b, "x1 + x1^-1")},
                                       {smap(b, b, {"x1^-1", "-x2"})},
                                       {P(v, "x*(4 - z^2) + y^2")},
                                       Pt(v, "(0,0,2)")};
  const std::string ccite = "[x, y] = -4x, [y, w] = -4w and [w, x] = 2y";
  e.expected.constants = {cf(0, 1, {-4, 0, 0}, ccite), cf(1, 2, {0, 0, -4}, ccite), cf(2, 0, {0, 2, 0}, ccite)};
  e.expected.invariant_recognition = "sl2";
  e.expected.invariant_recognition_citation = "Hence g(J_1) ≃ sl_2";
  e.procedure = [](const CatalogEntry& en, const RunOptions&, FactLog& log) {
    const PoissonPresentation& pres = *en.presentation;
    LaurentPoly x = pres.var("x"), y = pres.var("y"), z = pres.var("z");
    const char* bcite = "{x, y} = -2xz, {y, z} = 4 - z^2 and {z, x} = 2y";
    log.check("bracket table of the invariants", bcite,
              pres.bracket(x, y) == x * z * Scalar(-2) && pres.bracket(y, z) == (z * z) * Scalar(-1) + Scalar(4) &&
                  pres.bracket(z, x) == y * Scalar(2));
    // g1 of the invariants at J_1 versus the presentation at J_1
    LieAlgebra la = lie_from_invariants(*en.invariants);
    LieAlgebra lp = lie_from_point(pres, Pt(pres.vars(), "(0,0,2)"));
    log.check("g(J_1) from the presentation matches the invariants", "B^π and A_0 ... isomorphism of Poisson algebras", la == lp);
    log.check("phi(J_1) = J_2", "then φ(J_1) = J_2",
              en.automorphisms[0].map.evaluate_at(Pt(pres.vars(), "(0,0,2)")) == Pt(pres.vars(), "(0,0,-2)"));
  };
  return e;
}

// ---------------------------------------------------------------- U_q(sl2)

PoissonPresentation uqsl2_pres(int power) {
  VarSetPtr v = vars_of({"x", "y", "z"}, {false, false, true});
  const std::string p = std::to_string(power);
  return PoissonPresentation(BracketSpec::scaled(P(v, "2*z"), P(v, "x*y + z^" + p + " + z^-" + p)));
}

PoissonPresentation equitable_pres() {
  VarSetPtr v = vars_of({"x", "y", "z"}, {false, false, true});
  return PoissonPresentation(BracketSpec::exact(P(v, "2*(x + y + z - x*y*z)")));
}

CatalogEntry uqsl2() {
  CatalogEntry e;
  e.name = "uqsl2";
  e.citation = "The quantized enveloping algebra U_q(sl_2)";
  e.summary = "Bracket 2z{-,-}_f with f = xy + z + z^-1 on C[x, y, z^±1].";
  e.presentation = uqsl2_pres(1);
  VarSetPtr v = e.presentation->vars();
  e.grading = "z";
  std::vector<Point> pts = {Pt(v, "(0,0,-1)"), Pt(v, "(0,0,1)")};
  e.expected.ideals = pts;
  e.expected.ideals_citation = "There are two Poisson maximal ideals in A'";
  for (const auto& p : pts) e.expected.recognitions.push_back({p, "sl2", "whence g(J_1) ≃ sl_2"});
  e.expected.homogeneity = {{"", {}, "2-homogeneous", "A' is 2-homogeneous"},
                            {"f - 2", P(v, "x*y + z + z^-1 - 2"), "1-homogeneous", "A'_2 and A'_{-2} are both 1-homogeneous"},
                            {"f + 2", P(v, "x*y + z + z^-1 + 2"), "1-homogeneous", "A'_2 and A'_{-2} are both 1-homogeneous"}};
  e.automorphisms = {{"phi", smap(v, v, {"x", "-y", "-z"})}};
  e.procedure = [](const CatalogEntry& en, const RunOptions&, FactLog& log) {
    const PoissonPresentation& pres = *en.presentation;
    VarSetPtr v = pres.vars();
    LaurentPoly x = pres.var("x"), y = pres.var("y"), z = pres.var("z");
    const char* bcite = "{x, y} = 2(z - z^{-1}), {y, z} = 2zy and {z, x} = 2zx";
    log.check("bracket display", bcite,
              pres.bracket(x, y) == P(v, "2*z - 2*z^-1") && pres.bracket(y, z) == P(v, "2*z*y") &&
                  pres.bracket(z, x) == P(v, "2*z*x"));
    LieAlgebra l = lie_from_point(pres, Pt(v, "(0,0,1)"));
    log.check("g(J_1) constants from the linear parts of the bracket display", bcite,
              l.bracket_basis(0, 1) == Vector{0, 0, 4} && l.bracket_basis(1, 2) == Vector{0, 2, 0} &&
                  l.bracket_basis(2, 0) == Vector{2, 0, 0},
              "[x, y] = 4w, [y, w] = 2y, [w, x] = 2x");
    log.note("g(J_1) constants", "[x, y] = 2w, [y, w] = -2y and [w, x] = -2x",
             "linear parts of 2(z - z^-1), 2zy, 2zx at z = 1 give [x, y] = 4w, [y, w] = 2y, [w, x] = 2x; both are sl2");
    Sl2Triple t{{1, 0, 0}, {0, 0, 1}, {0, Scalar(1, 4), 0}, 0};
    log.check("(x, w, y/4) is an sl2-triple", "whence g(J_1) ≃ sl_2", is_sl2_triple(l, t));
    PoissonModule m = lifted(pres, Pt(v, "(0,0,1)"), 2);
    log.check("{z, -} on the 2-dimensional module at J_1 has spectrum {-1, 1}", "whence g(J_1) ≃ sl_2",
              sorted_spectrum(m.lie_action(z)) == std::vector<Scalar>{-1, 1});
    log.check("f - 2 lies in J_1 and f + 2 in J_2", "Then f - 2 ∈ J_1 and f + 2 ∈ J_2",
              evaluate(P(v, "x*y + z + z^-1 - 2"), Pt(v, "(0,0,1)")).is_zero() &&
                  evaluate(P(v, "x*y + z + z^-1 + 2"), Pt(v, "(0,0,-1)")).is_zero());
  };
  return e;
}

CatalogEntry uqsl2_equitable() {
  CatalogEntry e;
  e.name = "uqsl2-equitable";
  e.citation = "The quantized enveloping algebra U_q(sl_2), equitable presentation";
  e.summary = "Exact bracket of 2(x + y + z - xyz) on C[x, y, z^±1].";
  e.presentation = equitable_pres();
  VarSetPtr v = e.presentation->vars();
  e.grading = "z";
  std::vector<Point> pts = {Pt(v, "(-1,-1,-1)"), Pt(v, "(1,1,1)")};
  e.expected.ideals = pts;
  e.expected.ideals_citation = "are the only Poisson maximal ideals";
  for (const auto& p : pts) e.expected.recognitions.push_back({p, "sl2", "g(J_1) ≃ g(J_2) ≃ sl_2"});
  e.expected.homogeneity = {{"", {}, "2-homogeneous", "A' is 2-homogeneous"}};
  e.procedure = [](const CatalogEntry& en, const RunOptions& o, FactLog& log) {
    const PoissonPresentation& src = *en.presentation;
    VarSetPtr v = src.vars();
    LaurentPoly x = src.var("x"), y = src.var("y"), z = src.var("z");
    const char* bcite = "{x, y} = 2(1 - xy), {y, z} = 2(1 - yz) and {z, x} = 2(1 - xz)";
    log.check("bracket display", bcite,
              src.bracket(x, y) == P(v, "2 - 2*x*y") && src.bracket(y, z) == P(v, "2 - 2*y*z") &&
                  src.bracket(z, x) == P(v, "2 - 2*x*z"));
    PoissonPresentation tgt = uqsl2_pres(1);
    // as ring maps, the printed η^-1 formulas carry {-,-}_g to 2z{-,-}_f
    SubstitutionMap eta = smap(v, tgt.vars(), {"y + z^-1", "z^-1*(1 - x)", "z"});
    SubstitutionMap eta_inv = smap(tgt.vars(), v, {"1 - z*y", "x - z^-1", "z"});
    const char* ecite = "determines a Poisson isomorphism η from A'";
    MapCheck mc = verify_poisson_map(eta, src, tgt);
    log.check("eta is a Poisson map", ecite, mc.passed, mc.witness);
    MapCheck mi = verify_poisson_map(eta_inv, tgt, src);
    log.check("eta^-1 is a Poisson map", ecite, mi.passed, mi.witness);
    MapCheck printed = verify_poisson_map(smap(v, tgt.vars(), {"1 - z*y", "x - z^-1", "z"}), src, tgt);
    log.note("direction of eta", "η(x) = 1 - zy, η(y) = x - z^{-1}, η(z) = z",
             std::string("x -> 1 - zy, y -> x - z^-1 is Poisson from 2z{-,-}_f to {-,-}_g") +
                 (printed.passed ? "" : ", not in the printed direction (" + printed.witness + ")") +
                 "; the formulas printed for η^-1 give the map in the printed direction");
    bool inverse = true;
    for (std::size_t k = 0; k < 3; ++k) {
      inverse &= eta_inv.apply(eta.images()[k]) == src.var(k);
      inverse &= eta.apply(eta_inv.images()[k]) == tgt.var(k);
    }
    log.check("eta and eta^-1 are mutually inverse", ecite, inverse);
    // pulling the uqsl2 modules back along eta lands on the equitable ideals
    std::vector<Point> pulled;
    bool iso = true;
    for (const char* s : {"(0,0,-1)", "(0,0,1)"}) {
      PoissonModule m = lifted(tgt, Pt(tgt.vars(), s), 2);
      PoissonModule r = restrict_to_subalgebra(m, eta, src);
      pulled.push_back(r.point());
      iso &= verify_poisson_axioms(r, o.trials, o.seed).passed && isomorphic(r, lifted(src, r.point(), 2));
    }
    std::sort(pulled.begin(), pulled.end(), point_less);
    log.check("eta carries the two sl2 ideals onto each other's counterparts", ecite,
              pulled == std::vector<Point>{Pt(v, "(-1,-1,-1)"), Pt(v, "(1,1,1)")} && iso);
  };
  return e;
}

CatalogEntry uqsl2_4hom() {
  CatalogEntry e;
  e.name = "uqsl2-4hom";
  e.citation = "alternative 4-homogeneous version of U_q(sl_2)";
  e.summary = "Bracket 2z{-,-}_f with f = xy + z^2 + z^-2; two of the ideals need sqrt(-1).";
  e.presentation = uqsl2_pres(2);
  VarSetPtr v = e.presentation->vars();
  e.grading = "z";
  e.box.extra = {Pt(v, "(0,0,sqrt(-1))"), Pt(v, "(0,0,-sqrt(-1))")};
  std::vector<Point> pts = {Pt(v, "(0,0,-1)"), Pt(v, "(0,0,1)"), Pt(v, "(0,0,sqrt(-1))"), Pt(v, "(0,0,-sqrt(-1))")};
  e.expected.ideals = pts;
  e.expected.ideals_citation = "There are four Poisson maximal ideals J";
  for (const auto& p : pts) e.expected.recognitions.push_back({p, "sl2", "each such that g(J) ≃ sl_2"});
  e.expected.homogeneity = {{"", {}, "4-homogeneous", "and A' is 4-homogeneous"}};
  e.procedure = [](const CatalogEntry& en, const RunOptions&, FactLog& log) {
    const PoissonPresentation& pres = *en.presentation;
    log.check("{x, y} = 4(z^2 - z^-2)", "but with {x, y} = 4(z^2 - z^{-2})",
              pres.bracket(pres.var("x"), pres.var("y")) == P(pres.vars(), "4*z^2 - 4*z^-2"));
  };
  return e;
}

// ---------------------------------------------------------------- Whitney umbrella

CatalogEntry whitney() {
  CatalogEntry e;
  e.name = "whitney";
  e.citation = "The Whitney umbrella";
  e.summary = "Exact bracket of xy^2 - z^2; a line of singular points.";
  VarSetPtr v = vars_of({"x", "y", "z"});
  e.presentation = exact(v, "x*y^2 - z^2");
  e.grading = "x";
  std::vector<Point> pts;
  for (const auto& a : box_values(e.box)) pts.push_back(Point({a, 0, 0}));
  e.expected.ideals = pts;
  e.expected.ideals_citation = "the singularities of S_0 are at the points (α, 0, 0), α ∈ C";
  e.expected.recognitions = {{Pt(v, "(0,0,0)"), "heisenberg", "if α = 0 it is isomorphic to the 3-dimensional Heisenberg Lie algebra"},
                             {Pt(v, "(1,0,0)"), "solvable", "This algebra is solvable"},
                             {Pt(v, "(-2,0,0)"), "solvable", "This algebra is solvable"}};
  e.expected.homogeneity = {{"", {}, "not t-homogeneous (continuum of 1-dimensional classes)",
                             "every finite-dimensional simple Poisson A-module M is one-dimensional"}};
  e.procedure = [](const CatalogEntry& en, const RunOptions& o, FactLog& log) {
    const PoissonPresentation& pres = *en.presentation;
    VarSetPtr v = pres.vars();
    for (int alpha : {1, -2}) {
      Point pt({alpha, 0, 0});
      LieAlgebra l = lie_from_point(pres, pt);
      const std::string at = " at alpha = " + std::to_string(alpha);
      log.check("[u, y] = -2z, [y, z] = 0, [z, u] = 2 alpha y" + at, "[u, y] = -2z, [y, z] = 0 and [z, u] = 2αy",
                l.bracket_basis(0, 1) == Vector{0, 0, -2} && l.bracket_basis(1, 2) == Vector{0, 0, 0} &&
                    l.bracket_basis(2, 0) == Vector{0, 2 * alpha, 0});
      log.check("g(J) is not nilpotent" + at, "This algebra is solvable", is_solvable(l) && !is_nilpotent(l));
      log.check("characters exclude the y-direction" + at, "for some α, μ, ρ ∈ C with αρ = 0",
                is_character(l, {1, 0, 0}) && !is_character(l, {0, 1, 0}) && !is_character(l, {0, 0, 1}));
      PoissonModule m = solvable_character_module(pres, pt, {3, 0, 0});
      log.check("character module mu = 3, rho = 0 satisfies the axioms" + at, "{x, v}_M = μv, {y, v}_M = ρv",
                verify_poisson_axioms(m, o.trials, o.seed).passed);
    }
    Point origin = Pt(v, "(0,0,0)");
    LieAlgebra l0 = lie_from_point(pres, origin);
    SimpleModuleCatalog cat = classify_simple_modules(l0, recognize(l0));
    log.check("at alpha = 0 the characters form a 2-parameter family", "with αρ = 0",
              cat.character_space_dim == 2 && is_character(l0, {0, 1, 0}) && !is_character(l0, {0, 0, 1}),
              std::to_string(cat.character_space_dim));
    PoissonModule m0 = solvable_character_module(pres, origin, {2, -1, 0});
    log.check("character module mu = 2, rho = -1 at alpha = 0 satisfies the axioms", "{y, v}_M = ρv",
              verify_poisson_axioms(m0, o.trials, o.seed).passed);
  };
  return e;
}

// ---------------------------------------------------------------- Kleinian A_{n-1}

CatalogEntry kleinian_an(int n) {
  if (n < 2 || n > 5) throw UnsupportedError("kleinian-an(n) is sampled for n in 2..5");
  CatalogEntry e;
  e.name = "kleinian-an(" + std::to_string(n) + ")";
  e.citation = "Kleinian singularity of type A_{n-1}";
  e.summary = "Exact bracket of z^n - xy and the invariants of the n-th roots of unity.";
  e.presentation = kleinian_pres(n);
  e.invariants = kleinian_invariants(n);
  e.grading = "z";
  VarSetPtr v = e.presentation->vars();
  Point origin = Pt(v, "(0,0,0)");
  e.expected.ideals = std::vector<Point>{origin};
  e.expected.ideals_citation = "The maximal ideal J := xA + yA + zA is the unique Poisson maximal ideal";
  if (n == 2) {
    e.expected.recognitions = {{origin, "sl2", "the situation for n > 2 is quite different"}};
    e.expected.homogeneity = {{"", {}, "1-homogeneous", "B^{π_2} is 1-homogeneous"}};
    const std::string ccite = "{x, y} = nz^{n-1}, {y, z} = -y and {z, x} = -x";
    e.expected.constants = {cf(0, 1, {0, 0, 2}, ccite), cf(1, 2, {0, -1, 0}, ccite), cf(2, 0, {-1, 0, 0}, ccite)};
    e.expected.invariant_recognition = "sl2";
  } else {
    e.expected.recognitions = {{origin, "solvable", "This algebra is solvable"}};
    e.expected.homogeneity = {{"", {}, "not t-homogeneous (continuum of 1-dimensional classes)",
                               "the finite-dimensional simple Poisson A-modules are one-dimensional"},
                              {"f", P(v, "z^" + std::to_string(n) + " - x*y"),
                               "not t-homogeneous (continuum of 1-dimensional classes)", "The same is true for A_0"}};
    e.expected.constants = {cf(0, 1, {0, 0, 0}, "z^{n-1} ∈ J^2 so, in g(J), [x, y] = 0"),
                            cf(1, 2, {0, -1, 0}, "{y, z} = -y and {z, x} = -x"),
                            cf(2, 0, {-1, 0, 0}, "{y, z} = -y and {z, x} = -x")};
    e.expected.invariant_recognition = "solvable";
  }
  e.expected.constants_citation = "In the Poisson algebra B^{π_n}";
  e.expected.invariant_recognition_citation = "B^{π_n} ≃ A_0 as Poisson algebras";
  e.procedure = [n](const CatalogEntry& en, const RunOptions& o, FactLog& log) {
    const PoissonPresentation& pres = *en.presentation;
    VarSetPtr v = pres.vars();
    Point origin = Pt(v, "(0,0,0)");
    LieAlgebra l = lie_from_point(pres, origin);
    if (n > 2) {
      log.note("g(J) brackets carry no factor n", "[y, z] = -ny and [z, x] = -nx",
               "linear parts of {y, z} = -y and {z, x} = -x give [y, z] = " + vector_str(l.bracket_basis(1, 2)) +
                   " and [z, x] = " + vector_str(l.bracket_basis(2, 0)) + "; the isomorphism type is unchanged");
      bool ok = true;
      for (const Scalar& tau : {Scalar(1), Scalar(-3, 2), Scalar(0)}) {
        ok &= verify_poisson_axioms(solvable_character_module(pres, origin, {0, 0, tau}), o.trials, o.seed).passed;
      }
      log.check("one-dimensional modules {z, v} = tau v satisfy the axioms", "{z, v}_M = τv, τ ∈ C", ok);
      log.check("x and y act as zero on every one-dimensional module", "xv = yv = zv = 0 = {x, v}_M = {y, v}_M",
                is_character(l, {0, 0, 1}) && !is_character(l, {1, 0, 0}) && !is_character(l, {0, 1, 0}));
      return;
    }
    // B^{π_4} inside B^{π_2} via u = x^2/8, v = y^2/8, w = z/2
    PoissonPresentation ambient = kleinian_pres(2, true);
    VarSetPtr s = vars_of({"u", "v", "w"});
    PoissonPresentation sub = exact(s, "w^4/4 - u*v", true);
    SubstitutionMap emb = smap(s, v, {"x^2/8", "y^2/8", "z/2"});
    MapCheck mc = verify_poisson_map(emb, sub, ambient);
    const char* rcite = "B^{π_4} is generated by u = x^2/8 = x_1^4/16, v = y^2/8 = x_2^4/16 and w = z/2";
    log.check("u = x^2/8, v = y^2/8, w = z/2 is a Poisson embedding", rcite, mc.passed, mc.witness);
    SubstitutionMap theta = smap(v, v, {"-x", "-y", "z"});
    bool fixed = true;
    for (const auto& img : emb.images()) fixed &= theta.apply(img) == img;
    log.check("theta is Poisson and fixes u, v, w", "B^{π_4} = (B^{π_2})^θ",
              fixed && verify_poisson_map(theta, ambient, ambient).passed);
    log.note("normalization of u and v", "u = x^2/8 = x_1^4/16",
             "with x = x_1^2/2, x^2/8 = x_1^4/32; the entry uses u = x^2/8 and the potential w^4/4 - uv");
    bool splits = true;
    std::string detail;
    for (std::size_t d = 1; d <= o.max_dim; ++d) {
      PoissonModule m = lifted(ambient, origin, d);
      PoissonModule r = restrict_to_subalgebra(m, emb, sub);
      bool ok = r.point() == Pt(s, "(0,0,0)") && r.lie_action(sub.var("u")).is_zero() && r.lie_action(sub.var("v")).is_zero();
      std::vector<Scalar> want;
      for (std::size_t j = 0; j < d; ++j) want.push_back(Scalar(static_cast<long>(2 * j + 1 - d), 4));
      std::vector<Scalar> got = sorted_spectrum(r.lie_action(sub.var("w")));
      ok &= got == sorted(want);
      ok &= verify_poisson_axioms(r, o.trials, o.seed).passed;
      SemisimplicityCheck ss = is_semisimple(restrict_to_lie(r), unit_vector(3, 2));
      ok &= ss.semisimple && ss.summands.size() == d &&
            std::all_of(ss.summands.begin(), ss.summands.end(), [](const Subspace& x) { return x.dim() == 1; });
      if (!ok && detail.empty()) detail = "d = " + std::to_string(d) + ": w spectrum " + scalars_str(got);
      splits &= ok;
    }
    log.check("the d-dimensional module splits into d one-dimensional modules with {w, -} = (2j+1-d)/4",
              "{w, v_j}_M = (2j+1-d)v_j/4 so M splits into the direct sum of d one-dimensional simple Poisson B^{π_4}-modules",
              splits, detail);
  };
  return e;
}

// ---------------------------------------------------------------- D and E

CatalogEntry kleinian_de(const std::string& name, const std::string& f, const std::string& cite) {
  CatalogEntry e;
  e.name = name;
  e.citation = "Other Kleinian singularities";
  e.summary = "Exact bracket of " + f + ".";
  VarSetPtr v = vars_of({"x", "y", "z"});
  e.presentation = exact(v, f);
  e.grading = "z";
  e.expected.ideals = std::vector<Point>{Pt(v, "(0,0,0)")};
  e.expected.ideals_citation = "the unique Poisson maximal ideal J = xA + yA + zA";
  e.expected.homogeneity = {{"", {}, "not t-homogeneous (continuum of 1-dimensional classes)",
                             "The finite-dimensional simple Poisson modules for the other types of Kleinian singularities are all one-dimensional"}};
  e.procedure = [cite, name](const CatalogEntry& en, const RunOptions&, FactLog& log) {
    LieAlgebra l = lie_from_point(*en.presentation, Pt(en.presentation->vars(), "(0,0,0)"));
    LieRecognition r = recognize(l);
    log.check("g(J) is solvable", "the Lie algebra g(J) is solvable", is_solvable(l) && !r.sl2_type(), "recognized " + r.name());
    log.check("potential " + cite, cite, en.presentation->spec().potential() == P(en.presentation->vars(), cite));
    if (name == "kleinian-e7") {
      log.note("E7 potential", "f = x^2 + y^2 + yz^3 (type E_7)",
               "the usual normal form is x^2 + y^3 + yz^3; the entry keeps the printed potential, whose g(J) is " + r.name());
    }
  };
  return e;
}

CatalogEntry kleinian_d(int n) {
  if (n < 4 || n > 8) throw UnsupportedError("kleinian-d(n) is sampled for n in 4..8");
  const std::string f = "x^2 + y^2*z + z^" + std::to_string(n - 1);
  return kleinian_de("kleinian-d(" + std::to_string(n) + ")", f, f);
}

// ---------------------------------------------------------------- torus, Klein four invariants

PoissonPresentation ctheta_pres() {
  return exact(vars_of({"x", "v", "w"}), "2*x*v*w - x^2*v - 2*v^2 - 2*w^2 + 4*v", true);
}

PoissonPresentation dphi_pres() {
  VarSetPtr v = vars_of({"a", "u", "v"});
  LaurentPoly h = P(v, "2*a*u*v - 2*a^2 - u^2*v - u*v^2 + 2*u*v");
  return PoissonPresentation(BracketSpec::exact(h * Scalar(2)), {h});
}

CatalogEntry c_theta() {
  CatalogEntry e;
  e.name = "c-theta";
  e.citation = "Further invariants of the torus: C^θ";
  e.summary = "Exact bracket of g = 2xvw - x^2v - 2v^2 - 2w^2 + 4v, the invariants of the Klein four-group.";
  e.presentation = ctheta_pres();
  VarSetPtr v = e.presentation->vars();
  LaurentPoly g = e.presentation->relations()[0];
  e.grading = "x";
  e.expected.ideal_filter = g;
  std::vector<Point> pts = {Pt(v, "(2,2,2)"), Pt(v, "(-2,2,-2)"), Pt(v, "(2,0,0)"), Pt(v, "(-2,0,0)")};
  e.expected.ideals = pts;
  e.expected.ideals_citation = "There are four Poisson maximal ideals of A' containing g";
  for (const auto& p : pts) e.expected.recognitions.push_back({p, "sl2", "If J is any one of these, then g^2 ∈ J and g(J) ≃ sl_2"});
  e.expected.homogeneity = {{"g", g, "4-homogeneous", "C^θ is 4-homogeneous"}};
  e.automorphisms = {{"phi", smap(v, v, {"-x", "v", "-w"})}};
  e.embeddings = {{"into-c", smap(v, vars_of({"x", "y", "z"}), {"x", "y^2/2", "y*z/2"}),
                   std::make_shared<const PoissonPresentation>(ctheta_pres())}};
  e.procedure = [](const CatalogEntry& en, const RunOptions& o, FactLog& log) {
    const PoissonPresentation& pres = *en.presentation;
    VarSetPtr v = pres.vars();
    LaurentPoly x = pres.var("x"), vv = pres.var("v"), w = pres.var("w");
    log.check("{x, v} = 2xv - 4w", "In C^θ, {x, v} = 2xv - 4w", pres.bracket(x, vv) == P(v, "2*x*v - 4*w"));
    log.check("{v, w} = 2vw - 2vx", "{v, w} = 2vw - 2vx", pres.bracket(vv, w) == P(v, "2*v*w - 2*v*x"));
    log.check("{w, x} = 2xw - x^2 - 4v + 4", "{w, x} = 2t - 2v = 2xw - x^2 - 4v + 4",
              pres.bracket(w, x) == P(v, "2*x*w - x^2 - 4*v + 4"));
    const LaurentPoly& g = pres.relations()[0];
    bool in_j2 = true;
    for (const char* s : {"(2,2,2)", "(-2,2,-2)", "(2,0,0)", "(-2,0,0)"}) in_j2 &= relation_in_J_squared(pres, g, Pt(v, s)).in_j_squared;
    log.check("g lies in J^2 at I_1, I_2, L_1, L_2", "then g^2 ∈ J and g(J) ≃ sl_2", in_j2);
    log.note("g^2 ∈ J read as g ∈ J^2", "then g^2 ∈ J",
             "g^2 ∈ J only says g ∈ J; the verified fact is that g and its gradient vanish at the four points");

    PoissonPresentation c = torus_pres(true);
    const Embedding& emb = en.embeddings[0];
    MapCheck mc = verify_poisson_map(emb.map, *emb.sub, c);
    log.check("x, v = y^2/2, w = yz/2 is a Poisson embedding of C^θ in C", "C^θ is generated by x, v := y^2/2, w := yz/2",
              mc.passed, mc.witness);
    VarSetPtr cv = c.vars();
    const std::vector<std::pair<const char*, const char*>> over = {
        {"(2,2,2)", "(2,2,2)"}, {"(2,-2,-2)", "(2,2,2)"}, {"(-2,2,-2)", "(-2,2,-2)"}, {"(-2,-2,2)", "(-2,2,-2)"}};
    bool restrict_ok = true;
    std::string detail;
    for (std::size_t d = 1; d <= o.max_dim; ++d) {
      std::vector<PoissonModule> rs;
      for (const auto& [src, dst] : over) {
        PoissonModule r = restrict_to_subalgebra(lifted(c, Pt(cv, src), d), emb.map, pres);
        bool ok = r.point() == Pt(v, dst) && is_simple(restrict_to_lie(r)) && verify_poisson_axioms(r, o.trials, o.seed).passed &&
                  isomorphic(r, lifted(pres, Pt(v, dst), d));
        if (!ok && detail.empty()) detail = std::string("d = ") + std::to_string(d) + " from " + src + " lands at " + r.point().str();
        restrict_ok &= ok;
        rs.push_back(r);
      }
      restrict_ok &= isomorphic(rs[0], rs[1]) && isomorphic(rs[2], rs[3]) && !isomorphic(rs[0], rs[2]);
    }
    log.check("J_2- and J_3-modules restrict to isomorphic simple modules at I_1, J_4 and J_5 at I_2 (d <= " +
                  std::to_string(o.max_dim) + ")",
              "they are simple, isomorphic and annihilated by I_2", restrict_ok, detail);
    Point bad = Pt(cv, "(2,0,0)");
    Scalar yz = evaluate(c.bracket(c.var("y"), c.var("z")), bad);
    log.check("(2,0,0) in C is not Poisson maximal", "which is not Poisson",
              !is_poisson_maximal(c, bad) && yz == Scalar(-4), "{y, z}(2,0,0) = " + yz.str());
    log.check("(-2,0,0) in C is not Poisson maximal", "which is not Poisson", !is_poisson_maximal(c, Pt(cv, "(-2,0,0)")));
  };
  return e;
}

CatalogEntry d_phi() {
  CatalogEntry e;
  e.name = "d-phi";
  e.citation = "Further invariants of the torus: D = (C^θ)^φ";
  e.summary = "Exact bracket of 2h with h = 2auv - 2a^2 - u^2v - uv^2 + 2uv.";
  e.presentation = dphi_pres();
  VarSetPtr v = e.presentation->vars();
  LaurentPoly h = e.presentation->relations()[0];
  e.grading = "a";
  e.expected.ideal_filter = h;
  std::vector<Point> pts = {Pt(v, "(0,0,0)"), Pt(v, "(0,2,0)"), Pt(v, "(0,0,2)"), Pt(v, "(2,2,2)")};
  e.expected.ideals = pts;
  e.expected.ideals_citation = "There are four Poisson maximals";
  for (const auto& p : pts) e.expected.recognitions.push_back({p, "sl2", "there is a Poisson subalgebra D, of C^θ, that is isomorphic to C"});
  e.expected.homogeneity = {{"h", h, "4-homogeneous", "D ≃ C"}};
  e.embeddings = {{"into-ctheta", smap(v, vars_of({"x", "v", "w"}), {"x*w/2", "x^2/2", "v"}),
                   std::make_shared<const PoissonPresentation>(dphi_pres())}};
  e.procedure = [](const CatalogEntry& en, const RunOptions& o, FactLog& log) {
    const PoissonPresentation& pres = *en.presentation;
    VarSetPtr v = pres.vars();
    PoissonPresentation ct = ctheta_pres();
    VarSetPtr cv = ct.vars();
    const Embedding& emb = en.embeddings[0];
    MapCheck mc = verify_poisson_map(emb.map, *emb.sub, ct);
    log.check("u = x^2/2, v, a = xw/2 is a Poisson embedding of D in C^θ", "D is generated by u := x^2/2, v and a := xw/2",
              mc.passed, mc.witness);
    const std::vector<std::pair<std::string, std::string>> labels = {
        {"I_1", "(2,2,2)"}, {"I_2", "(-2,2,-2)"}, {"L_1", "(2,0,0)"}, {"L_2", "(-2,0,0)"}};
    std::map<std::string, Point> proj;
    for (const auto& [name, s] : labels) proj[name] = emb.map.evaluate_at(Pt(cv, s));
    std::string mapping;
    for (const auto& [name, s] : labels) mapping += (mapping.empty() ? "" : ", ") + name + " -> " + proj[name].str();
    log.check("projections: I_1, I_2 land at (2,2,2) and L_1, L_2 at (0,2,0)", "computed from the embedding",
              proj["I_1"] == Pt(v, "(2,2,2)") && proj["I_2"] == Pt(v, "(2,2,2)") && proj["L_1"] == Pt(v, "(0,2,0)") &&
                  proj["L_2"] == Pt(v, "(0,2,0)"),
              mapping);
    log.note("projection labels", "annihilated by L_1 or L_2, respectively I_1 or I_2, become ... annihilated by L_4, respectively L_3",
             "direct projection gives " + mapping + ", so L_i map to L_3 and I_i map to L_4");
    bool ok = true;
    std::string detail;
    for (std::size_t d = 1; d <= o.max_dim; ++d) {
      std::vector<PoissonModule> rs;
      for (const auto& [name, s] : labels) {
        PoissonModule r = restrict_to_subalgebra(lifted(ct, Pt(cv, s), d), emb.map, pres);
        bool good = r.point() == proj[name] && is_simple(restrict_to_lie(r)) &&
                    verify_poisson_axioms(r, o.trials, o.seed).passed && isomorphic(r, lifted(pres, r.point(), d));
        if (!good && detail.empty()) detail = "d = " + std::to_string(d) + " from " + name;
        ok &= good;
        rs.push_back(r);
      }
      ok &= isomorphic(rs[0], rs[1]) && isomorphic(rs[2], rs[3]);
    }
    log.check("restrictions are simple and pairwise isomorphic (d <= " + std::to_string(o.max_dim) + ")",
              "become isomorphic simple Poisson D-modules", ok, detail);
    bool missed = true;
    for (const char* s : {"(0,0,0)", "(0,0,2)"}) {
      for (const auto& [name, p] : proj) missed &= p != Pt(v, s);
    }
    log.check("I_3 and I_4 are not images of C^θ ideals", "that are not restrictions of simple Poisson C^θ-modules", missed);
  };
  return e;
}

// ---------------------------------------------------------------- Weyl group invariants

PoissonPresentation a2_ambient() {
  VarSetPtr v = vars_of({"a1", "a2", "b1", "b2"});
  return table(v, {{{"a1", "b1"}, "6"}, {{"a2", "b2"}, "6"}, {{"a1", "b2"}, "-3"}, {{"a2", "b1"}, "-3"}});
}

std::vector<std::string> a2_generator_text() {
  // a3 = -a1-a2, b3 = -b1-b2 substituted
  return {"(a1^2 + a2^2 + a1*a2)/9",
          "(b1^2 + b2^2 + b1*b2)/9",
          "-(2*a1*b1 + a1*b2 + a2*b1 + 2*a2*b2)/9",
          "(a1*a2^2 + a2*a1^2)/9",
          "(b1*b2^2 + b2*b1^2)/9",
          "(2*a1*b1*b2 + 2*a2*b1*b2 + a1*b2^2 + a2*b1^2)/9",
          "(2*b1*a1*a2 + 2*b2*a1*a2 + b1*a2^2 + b2*a1^2)/9"};
}

std::vector<SubstitutionMap> a2_group(const VarSetPtr& v, bool with_negation) {
  std::vector<SubstitutionMap> g = {smap(v, v, {"a2", "a1", "b2", "b1"}), smap(v, v, {"-a1 - a2", "a2", "-b1 - b2", "b2"})};
  if (with_negation) g.push_back(smap(v, v, {"-a1", "-a2", "-b1", "-b2"}));
  return g;
}

InvariantPresentation a2_invariants() {
  PoissonPresentation s = a2_ambient();
  VarSetPtr g = vars_of({"g1", "g2", "g3", "m1", "m2", "m3", "m4"});
  std::vector<LaurentPoly> gens;
  for (const auto& t : a2_generator_text()) gens.push_back(P(s.vars(), t));
  std::vector<LaurentPoly> rel = {P(g, "g3*m3 + 3*g1*m2 + g2*m4"), P(g, "g3*m4 + 3*g2*m1 + g1*m3"),
                                  P(g, "m3^2 - 12*g1*g2^2 + 3*g2*g3^2 - 3*m2*m4"),
                                  P(g, "m4^2 - 12*g2*g1^2 + 3*g1*g3^2 - 3*m1*m3"),
                                  P(g, "m3*m4 - 9*m1*m2 + 12*g1*g2*g3 - 3*g3^3")};
  return InvariantPresentation{s, g, gens, a2_group(s.vars(), false), rel, {}};
}

ActionTable prop52_table(bool mutate) {
  auto r = [](std::size_t i, Scalar c = 1) { return vec(5, {{i, c}}); };
  ActionTable t;
  t.module_labels = {"r1", "r2", "r3", "r4", "r5"};
  // lie indices g1 g2 g3 m1 m2 m3 m4 = 0..6, module r1..r5 = 0..4
  t.entries = {{0, 0, r(mutate ? 2 : 1)}, {0, 2, r(4)},     {0, 4, r(3, 2)},   {1, 1, r(0, -1)}, {1, 3, r(4, -1)},
               {1, 4, r(2, -2)},          {2, 0, r(0, -1)}, {2, 1, r(1)},      {2, 2, r(2, -2)}, {2, 3, r(3, 2)},
               {3, 0, r(3)},              {4, 1, r(2, -1)}, {5, 0, r(2)},      {5, 1, r(4, -1)}, {6, 0, r(4)},
               {6, 1, r(3, -1)}};
  return t;
}

std::string weights_str(const std::vector<Scalar>& w) { return scalars_str(sorted(w)); }

std::vector<Scalar> symmetric_weights(std::initializer_list<int> w) {
  std::vector<Scalar> out;
  for (int x : w) out.push_back(x);
  return sorted(out);
}

void check_weyl_common(const CatalogEntry& en, const std::string& tag, const std::vector<Scalar>& weights,
                       const std::string& cite, FactLog& log) {
  const InvariantPresentation& ip = *en.invariants;
  LieAlgebra l = lie_from_invariants(ip);
  LieRecognition r = recognize(l);
  log.check("radical is abelian with sl2-weights " + weights_str(weights), cite,
            r.radical && subalgebra(l, *r.radical).is_abelian() && sorted(r.radical_weights) == weights,
            weights_str(r.radical_weights));
  log.check("g(J) is perfect", "[g(J), g(J)] = g(J)", l.derived().dim() == l.dim());
  Subspace s(l.dim(), std::vector<Vector>{unit_vector(l.dim(), 0), unit_vector(l.dim(), 1), unit_vector(l.dim(), 2)});
  log.check("g1, g2, g3 span a subalgebra isomorphic to sl2", "g_1, g_2 and g_3 generate a subalgebra s isomorphic to sl_2",
            l.is_subalgebra(s) && recognize(subalgebra(l, s)).name() == "sl2");
  if (r.radical && r.triple) {
    std::vector<Matrix> act = action_on_ideal(l, *r.radical, {r.triple->e, r.triple->h, r.triple->f});
    log.check("radical is a simple module over sl2", "is simple as an s-module",
              generated_algebra_dim(act, r.radical->dim()) == r.radical->dim() * r.radical->dim());
  }
  bool in_j2 = true;
  for (const auto& rel : ip.relations) {
    LinearPart lp = linear_part(rel, Point(std::vector<Scalar>(ip.generator_vars->size(), Scalar(0))));
    in_j2 &= lp.value.is_zero() && std::all_of(lp.gradient.begin(), lp.gradient.end(), [](const Scalar& c) { return c.is_zero(); });
  }
  log.check("every listed relation lies in J^2", "each r_i ∈ J^2", in_j2);
  single_ideal_homogeneity(l, ip.base_point(), "1-homogeneous", tag, log);
}

CatalogEntry weyl_a2() {
  CatalogEntry e;
  e.name = "weyl-a2";
  e.citation = "The quotient varieties h ⊕ h*/W: type A_2";
  e.summary = "S_3-invariants of C[a1, a2, b1, b2] and the non-semisimple module I/IJ.";
  e.invariants = a2_invariants();
  e.table = prop52_table(false);
  e.grading = "g3";
  const std::string c = "in g(J), [g_1, g_2] = -g_3, [g_2, g_3] = 2g_2, [g_1, g_3] = -2g_1";
  auto u = [](std::size_t i, Scalar s = 1) { return vec(7, {{i, s}}); };
  const Vector z = zero_vector(7);
  e.expected.constants = {cf(0, 1, u(2, -1), c), cf(1, 2, u(1, 2), c), cf(0, 2, u(0, -2), c),
                          cf(0, 3, z, c), cf(0, 4, u(5), c), cf(0, 5, u(6, 2), c), cf(0, 6, u(3, 3), c),
                          cf(1, 3, u(6, -1), c), cf(1, 4, z, c), cf(1, 5, u(4, -3), c), cf(1, 6, u(5, -2), c),
                          cf(2, 3, u(3, 3), c), cf(2, 4, u(4, -3), c), cf(2, 5, u(5, -1), c), cf(2, 6, u(6), c)};
  for (std::size_t i = 3; i < 7; ++i) {
    for (std::size_t j = i + 1; j < 7; ++j) e.expected.constants.push_back(cf(i, j, z, "[m_i, m_j] = 0, 1 ≤ i, j ≤ 4"));
  }
  e.expected.invariant_recognition = "sl2_semidirect(4)";
  e.expected.invariant_recognition_citation = "the direct sum of sl_2 and its unique 4-dimensional simple module";
  e.procedure = [](const CatalogEntry& en, const RunOptions&, FactLog& log) {
    check_weyl_common(en, "P_7 and S^W share their finite-dimensional simple Poisson modules",
                      symmetric_weights({3, 1, -1, -3}), "m_1, m_2, m_3 and m_4 generate an abelian subalgebra", log);
    log.note("g_1 generator", "g_1 = (a_1^2 + a_2^2 + a_1a_3)/9",
             "a_1^2 + a_2^2 + a_1a_3 is not S_3-invariant; the entry uses (a_1^2 + a_2^2 + a_1a_2)/9");
    log.note("sign in r_5", "r_5 = m_3 m_4 - 9m_1 m_2 + 12g_1 g_2 g_3 + 3g_3^3",
             "the printed r_5 does not vanish on the invariants; m_3 m_4 - 9m_1 m_2 + 12g_1 g_2 g_3 - 3g_3^3 does");
    LieAlgebra l = lie_from_invariants(*en.invariants);
    LieRep m = module_from_table(l, *en.table);
    log.check("I/IJ action table defines a representation of g(J)", "N is a Poisson submodule of M", true);
    const Vector g3 = unit_vector(7, 2);
    log.check("g3 acts with eigenvalues -2, -1, 0, 1, 2", "E_{-2} = Cr_3, E_{-1} = Cr_1, E_0 = Cr_5, E_1 = Cr_2 and E_2 = Cr_4",
              sorted_spectrum(m.act(g3)) == symmetric_weights({-2, -1, 0, 1, 2}));
    Lattice lat = submodule_lattice(m, g3);
    Subspace n(5, std::vector<Vector>{unit_vector(5, 2), unit_vector(5, 3), unit_vector(5, 4)});
    log.check("the only submodules are 0, N and M", "the only sums of these that are Poisson submodules are 0, M and N",
              lat.complete && lat.members.size() == 3 && lat.members[1] == n, std::to_string(lat.members.size()) + " members");
    CompositionSeries cs = composition_series(m, g3);
    log.check("composition factors have dimensions 3, 2", "Thus N is simple and is the unique Poisson submodule of M",
              cs.verified && cs.factor_dims == std::vector<std::size_t>{3, 2});
    SemisimplicityCheck ss = is_semisimple(m, g3);
    log.check("M is not semisimple", "which cannot then be Poisson semisimple", ss.decided && !ss.semisimple, ss.witness);
    Subspace s(7, std::vector<Vector>{unit_vector(7, 0), unit_vector(7, 1), unit_vector(7, 2)});
    LieRep ms = restrict_rep(m, s);
    std::optional<Vector> h = Vector{0, 0, 1};
    SemisimplicityCheck sss = is_semisimple(ms, h);
    Subspace n2(5, std::vector<Vector>{unit_vector(5, 0), unit_vector(5, 1)});
    bool split = sss.semisimple && sss.summands.size() == 2;
    if (split) split = (sss.summands[0] == n && sss.summands[1] == n2) || (sss.summands[0] == n2 && sss.summands[1] == n);
    log.check("over s, M = N ⊕ N'", "such that M = N ⊕ N'", split);
    log.check("N' = M/N is simple", "The same method establishes the Poisson simplicity of N'",
              cs.verified && cs.factor_dims.size() == 2 && cs.factor_dims[1] == 2);
    bool rejected = false;
    try {
      module_from_table(l, prop52_table(true));
    } catch (const DomainError&) {
      rejected = true;
    }
    log.check("the mutated table {g1, r1} = r3 is rejected", "{g_1, r_1} = r_2", rejected);
  };
  return e;
}

PoissonPresentation b2_ambient() {
  VarSetPtr v = vars_of({"x1", "x2", "y1", "y2"});
  return table(v, {{{"x1", "y1"}, "1"}, {{"x2", "y2"}, "1"}});
}

InvariantPresentation b2_invariants(const LaurentPoly& m3) {
  PoissonPresentation s = b2_ambient();
  VarSetPtr v = s.vars();
  VarSetPtr g = vars_of({"g1", "g2", "g3", "m1", "m2", "m3", "m4", "m5"});
  std::vector<LaurentPoly> gens = {P(v, "x1^2 + x2^2"), P(v, "y1^2 + y2^2"), P(v, "x1*y1 + x2*y2"),
                                   P(v, "x1^2*x2^2"),   P(v, "y1^2*y2^2"),   m3,
                                   P(v, "x1*y1^3 + x2*y2^3"), P(v, "x1^3*y1 + x2^3*y2")};
  std::vector<SubstitutionMap> group = {smap(v, v, {"-x1", "x2", "-y1", "y2"}), smap(v, v, {"x2", "x1", "y2", "y1"})};
  return InvariantPresentation{s, g, gens, group, {}, {}};
}

CatalogEntry weyl_b2() {
  CatalogEntry e;
  e.name = "weyl-b2";
  e.citation = "The quotient varieties h ⊕ h*/W: type B_2";
  e.summary = "Dihedral invariants of C[x1, x2, y1, y2]; m3 is derived.";
  B2Derivation der = derive_b2_m3();
  e.invariants = b2_invariants(der.m3);
  e.grading = "g3";
  const std::string c = "[g_1, g_2] = 4g_3, [g_1, g_3] = 2g_1, [g_2, g_3] = -2g_2";
  auto u = [](std::size_t i, Scalar s = 1) { return vec(8, {{i, s}}); };
  const Vector z = zero_vector(8);
  // g1 g2 g3 m1 m2 m3 m4 m5 = 0..7
  e.expected.constants = {cf(0, 1, u(2, 4), c),   cf(0, 2, u(0, 2), c),   cf(1, 2, u(1, -2), c), cf(0, 3, z, c),
                          cf(1, 4, z, c),         cf(2, 5, z, c),         cf(0, 4, u(6, -4), c), cf(0, 5, u(7, -2), c),
                          cf(0, 6, u(5, -12), c), cf(0, 7, u(3, -4), c),  cf(1, 3, u(7, 4), c),  cf(1, 5, u(6, 2), c),
                          cf(1, 6, u(4, 4), c),   cf(1, 7, u(5, 12), c),  cf(2, 3, u(3, -4), c), cf(2, 4, u(4, 4), c),
                          cf(2, 6, u(6, 2), c),   cf(2, 7, u(7, -2), c)};
  for (std::size_t i = 3; i < 8; ++i) {
    for (std::size_t j = i + 1; j < 8; ++j) e.expected.constants.push_back(cf(i, j, z, "[m_j, m_k] = 0 for 1 ≤ j, k ≤ 5"));
  }
  e.expected.invariant_recognition = "sl2_semidirect(5)";
  e.expected.invariant_recognition_citation = "the direct sum of sl_2 and its unique 5-dimensional simple module M";
  e.procedure = [der](const CatalogEntry& en, const RunOptions&, FactLog& log) {
    std::string t;
    for (const auto& line : der.transcript) t += (t.empty() ? "" : "; ") + line;
    log.check("m3 is determined modulo products by [g2, m3] = 2m4 and [g1, m3] = -2m5", "[g_1, m_3] = -2m_5, [g_2, m_3] = 2m_4",
              der.unique, t);
    log.note("m_3 generator", "m_3 = x_1y_1 + x_2y_2", "the printed m_3 repeats g_3; the derived m_3 is " + der.m3.str());
    check_weyl_common(en, "S^W and P_8 are 1-homogeneous Poisson algebras", symmetric_weights({4, 2, 0, -2, -4}),
                      "m_1, m_2, m_3, m_4 and m_5 generate an abelian subalgebra m", log);
  };
  return e;
}

CatalogEntry weyl_g2() {
  CatalogEntry e;
  e.name = "weyl-g2";
  e.citation = "The quotient varieties h ⊕ h*/W: type G_2";
  e.summary = "Invariants of S_3 times the sign; n_j are products of the A_2 generators m_i.";
  PoissonPresentation s = a2_ambient();
  VarSetPtr g = vars_of({"g1", "g2", "g3", "n1", "n2", "n3", "n4", "n5", "n6", "n7"});
  std::vector<std::string> t = a2_generator_text();
  auto m = [&](int i) { return P(s.vars(), t[static_cast<std::size_t>(i) + 2]); };
  std::vector<LaurentPoly> gens = {P(s.vars(), t[0]), P(s.vars(), t[1]), P(s.vars(), t[2]), m(1) * m(1), m(2) * m(2),
                                   m(1) * m(2),       m(1) * m(3),       m(1) * m(4),       m(2) * m(3), m(2) * m(4)};
  e.invariants = InvariantPresentation{s, g, gens, a2_group(s.vars(), true), {}, {}};
  e.grading = "g3";
  e.expected.invariant_recognition = "sl2_semidirect(7)";
  e.expected.invariant_recognition_citation = "the direct sum of sl_2 and its unique 7-dimensional simple module N";
  e.procedure = [](const CatalogEntry& en, const RunOptions&, FactLog& log) {
    check_weyl_common(en, "S^W and P_10 are both 1-homogeneous Poisson algebras", symmetric_weights({6, 4, 2, 0, -2, -4, -6}),
                      "n_1, ..., n_7 generate an abelian subalgebra n, which is the radical of g(J)", log);
    LieAlgebra l = lie_from_invariants(*en.invariants);
    std::string table;
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 3; j < l.dim(); ++j) {
        Vector b = l.bracket_basis(i, j);
        if (!is_zero_vector(b)) table += (table.empty() ? "" : ", ") + ("[" + l.labels()[i] + "," + l.labels()[j] + "] = " + vector_str(b));
      }
    }
    log.note("computed constants between s and n", "The brackets {g, h} between generators can be computed from the data", table);
  };
  return e;
}

// ---------------------------------------------------------------- Kirillov-Kostant and abelian

CatalogEntry kirillov_kostant_sl2() {
  CatalogEntry e;
  e.name = "kirillov-kostant-sl2";
  e.citation = "The Kirillov-Kostant bracket";
  e.summary = "S(sl2) with {e, f} = h, {h, e} = 2e, {h, f} = -2f.";
  VarSetPtr v = vars_of({"e", "h", "f"});
  StructureConstants c(3, std::vector<std::vector<Scalar>>(3, Vector(3)));
  auto set = [&](std::size_t i, std::size_t j, std::size_t k, Scalar s) {
    c[i][j][k] = s;
    c[j][i][k] = -s;
  };
  set(1, 0, 0, 2);
  set(1, 2, 2, -2);
  set(0, 2, 1, 1);
  e.presentation = PoissonPresentation(BracketSpec::kirillov_kostant(v, c));
  e.grading = "h";
  e.expected.ideals = std::vector<Point>{Pt(v, "(0,0,0)")};
  e.expected.ideals_citation = "the only Poisson maximal ideal is J = x_1A + x_2A + ... + x_nA";
  e.expected.recognitions = {{Pt(v, "(0,0,0)"), "sl2", "g(J) ≃ g"}};
  e.expected.homogeneity = {{"", {}, "1-homogeneous", "correspond exactly to the finite-dimensional simple g-modules"}};
  e.procedure = [c](const CatalogEntry& en, const RunOptions&, FactLog& log) {
    LieAlgebra l = lie_from_point(*en.presentation, Pt(en.presentation->vars(), "(0,0,0)"));
    log.check("g(J) has the structure constants of g", "{x_i, x_j} = [x_i, x_j]", l.constants() == c);
  };
  return e;
}

CatalogEntry abelian(int n) {
  if (n < 1 || n > 6) throw UnsupportedError("abelian(n) is sampled for n in 1..6");
  CatalogEntry e;
  e.name = "abelian(" + std::to_string(n) + ")";
  e.citation = "The Kirillov-Kostant bracket, abelian case";
  e.summary = "Zero bracket on n variables: every point is Poisson maximal.";
  std::vector<std::string> names;
  for (int i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  VarSetPtr v = vars_of(names);
  e.presentation = PoissonPresentation(BracketSpec::zero(v));
  e.box = SearchBox{1, 1, {}};
  std::vector<Point> pts;
  std::vector<Scalar> vals = box_values(e.box);
  std::size_t total = 1;
  for (int i = 0; i < n; ++i) total *= vals.size();
  for (std::size_t k = 0; k < total; ++k) {
    std::vector<Scalar> c;
    std::size_t r = k;
    for (int i = 0; i < n; ++i) {
      c.push_back(vals[r % vals.size()]);
      r /= vals.size();
    }
    pts.push_back(Point(c));
  }
  e.expected.ideals = pts;
  e.expected.ideals_citation = "every maximal ideal is Poisson for the zero bracket";
  e.expected.recognitions = {{Point(std::vector<Scalar>(n, Scalar(0))), "abelian", "the Lie algebra g(J) is abelian"}};
  e.expected.homogeneity = {{"", {}, "not t-homogeneous (continuum of 1-dimensional classes)",
                             "{f, m}_M = Σ β_i ∂f/∂x_i(α_1, α_2, ..., α_n)m"}};
  e.procedure = [n](const CatalogEntry& en, const RunOptions& o, FactLog& log) {
    Vector beta;
    std::vector<Scalar> alpha(n, Scalar(0));
    alpha[0] = 1;
    for (int i = 1; i <= n; ++i) beta.push_back(i);
    PoissonModule m = solvable_character_module(*en.presentation, Point(alpha), beta);
    log.check("character module with beta = (1, ..., n) satisfies the axioms", "{f, m}_M = Σ β_i ∂f/∂x_i(α)m",
              verify_poisson_axioms(m, o.trials, o.seed).passed);
  };
  return e;
}

int parse_param(const std::string& name, const std::string& prefix) {
  std::smatch mt;
  std::regex re("^" + std::regex_replace(prefix, std::regex(R"([()])"), R"(\$&)") + R"(\((\d+)\)$)");
  if (!std::regex_match(name, mt, re)) return -1;
  return std::stoi(mt[1]);
}

}  // namespace

std::vector<std::string> catalog_names() {
  return {"kleinian-a1",    "torus-so3",      "laurent-inv",    "uqsl2",          "uqsl2-equitable",
          "uqsl2-4hom",     "whitney",        "kleinian-an(2)", "kleinian-an(3)", "kleinian-an(4)",
          "kleinian-an(5)", "kleinian-d(4)",  "kleinian-d(5)",  "kleinian-e6",    "kleinian-e7",
          "kleinian-e8",    "c-theta",        "d-phi",          "weyl-a2",        "weyl-b2",
          "weyl-g2",        "kirillov-kostant-sl2", "abelian(3)"};
}

CatalogEntry get_entry(const std::string& raw) {
  std::string name = raw;
  if (name == "e6" || name == "e7" || name == "e8") name = "kleinian-" + name;
  static const std::map<std::string, std::function<CatalogEntry()>> fixed = {
      {"kleinian-a1", kleinian_a1},
      {"torus-so3", torus_so3},
      {"laurent-inv", laurent_inv},
      {"uqsl2", uqsl2},
      {"uqsl2-equitable", uqsl2_equitable},
      {"uqsl2-4hom", uqsl2_4hom},
      {"whitney", whitney},
      {"kleinian-e6", [] { return kleinian_de("kleinian-e6", "x^2 + y^3 + z^4", "x^2 + y^3 + z^4"); }},
      {"kleinian-e7", [] { return kleinian_de("kleinian-e7", "x^2 + y^2 + y*z^3", "x^2 + y^2 + y*z^3"); }},
      {"kleinian-e8", [] { return kleinian_de("kleinian-e8", "x^2 + y^3 + z^5", "x^2 + y^3 + z^5"); }},
      {"c-theta", c_theta},
      {"d-phi", d_phi},
      {"weyl-a2", weyl_a2},
      {"weyl-b2", weyl_b2},
      {"weyl-g2", weyl_g2},
      {"kirillov-kostant-sl2", kirillov_kostant_sl2},
  };
  if (auto it = fixed.find(name); it != fixed.end()) return it->second();
  if (int n = parse_param(name, "kleinian-an"); n >= 0) return kleinian_an(n);
  if (int n = parse_param(name, "kleinian-d"); n >= 0) return kleinian_d(n);
  if (int n = parse_param(name, "abelian"); n >= 0) return abelian(n);
  throw DomainError("unknown catalog entry: " + raw);
}

B2Derivation derive_b2_m3() {
  PoissonPresentation s = b2_ambient();
  VarSetPtr v = s.vars();
  B2Derivation out{LaurentPoly(v), {}, false};
  const LaurentPoly g1 = P(v, "x1^2 + x2^2"), g2 = P(v, "y1^2 + y2^2"), g3 = P(v, "x1*y1 + x2*y2");
  const LaurentPoly m4 = P(v, "x1*y1^3 + x2*y2^3"), m5 = P(v, "x1^3*y1 + x2^3*y2");
  const std::vector<LaurentPoly> cand = {P(v, "x1^2*y1^2 + x2^2*y2^2"), P(v, "x1^2*y2^2 + x2^2*y1^2"), P(v, "x1*x2*y1*y2")};
  out.transcript.push_back("candidates: weight-0 bidegree-(2,2) invariants " + cand[0].str() + ", " + cand[1].str() + ", " +
                           cand[2].str());
  // unknowns c1 c2 c3 p q:  {g2, m} - p g2 g3 = 2 m4  and  {g1, m} - q g1 g3 = -2 m5
  const LaurentPoly zero(v);
  std::vector<std::array<LaurentPoly, 2>> cols;
  for (const auto& c : cand) cols.push_back({s.bracket(g2, c), s.bracket(g1, c)});
  cols.push_back({g2 * g3 * Scalar(-1), zero});
  cols.push_back({zero, g1 * g3 * Scalar(-1)});
  const std::array<LaurentPoly, 2> rhs = {m4 * Scalar(2), m5 * Scalar(-2)};
  std::vector<std::pair<int, Exponent>> rows;
  for (int eq = 0; eq < 2; ++eq) {
    std::vector<const LaurentPoly*> all = {&rhs[eq]};
    for (const auto& c : cols) all.push_back(&c[eq]);
    for (const auto* p : all) {
      for (const auto& [ex, coef] : p->terms()) {
        if (std::find(rows.begin(), rows.end(), std::make_pair(eq, ex)) == rows.end()) rows.emplace_back(eq, ex);
      }
    }
  }
  Matrix a(rows.size(), cols.size());
  Vector b(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const auto& [eq, ex] = rows[r];
    for (std::size_t k = 0; k < cols.size(); ++k) a(r, k) = cols[k][eq].coefficient(ex);
    b[r] = rhs[eq].coefficient(ex);
  }
  std::optional<Vector> sol = solve_linear(a, b);
  if (!sol) {
    out.transcript.push_back("no solution");
    return out;
  }
  std::vector<Vector> ker = kernel(a);
  out.transcript.push_back("solution space has dimension " + std::to_string(ker.size()));
  // kernel directions must be products g1 g2 and g3^2 (zero modulo J^2)
  const LaurentPoly prod1 = g1 * g2, prod2 = g3 * g3;
  std::array<LaurentPoly, 2> prods = {prod1, prod2};
  bool products_only = true;
  for (const auto& k : ker) {
    LaurentPoly dir(v);
    for (std::size_t i = 0; i < 3; ++i) dir += cand[i] * k[i];
    products_only &= express_in_span(dir, prods).has_value();
  }
  out.transcript.push_back(products_only ? "kernel lies in span(g1*g2, g3^2)" : "kernel leaves span(g1*g2, g3^2)");
  // reduce to the representative with no x1^2*y2^2 and no x1*x2*y1*y2 terms
  LaurentPoly m(v);
  for (std::size_t i = 0; i < 3; ++i) m += cand[i] * (*sol)[i];
  const Scalar c_mixed = m.coefficient(Exponent{1, 1, 1, 1});
  m -= prod2 * (c_mixed / Scalar(2));
  const Scalar c_cross = m.coefficient(Exponent{2, 0, 0, 2});
  m -= prod1 * c_cross;
  out.m3 = m;
  out.unique = products_only && ker.size() <= 2;
  out.transcript.push_back("m3 = " + m.str() + " modulo products");
  return out;
}

}  // namespace patlas
