#include <gtest/gtest.h>

#include <set>

#include "patlas/errors.hpp"
#include "support.hpp"

using namespace patlas;
using namespace patlas::test;

namespace {

std::vector<std::string> strs(const std::vector<LaurentPoly>& ps) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(p.str());
  return out;
}

std::vector<std::string> generator_brackets(const PoissonPresentation& pres) {
  std::vector<std::string> out;
  std::size_t n = pres.vars()->size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) out.push_back(pres.bracket(pres.var(i), pres.var(j)).str());
  return out;
}

}  // namespace

TEST(Catalog, NamesAreDistinctAndResolvable) {
  auto names = catalog_names();
  EXPECT_EQ(names.size(), 23u);
  EXPECT_EQ(std::set<std::string>(names.begin(), names.end()).size(), names.size());
  for (const auto& n : names) EXPECT_EQ(get_entry(n).name, n);
  EXPECT_THROW(get_entry("no-such-entry"), DomainError);
}

TEST(Catalog, EntryExamples) {
  auto torus = get_entry("torus-so3");
  ASSERT_TRUE(torus.expected.ideals);
  EXPECT_EQ(torus.expected.ideals->size(), 5u);
  auto e8 = get_entry("e8");
  EXPECT_EQ(e8.name, "kleinian-e8");
  ASSERT_TRUE(e8.presentation && e8.presentation->spec().potential());
  EXPECT_EQ(*e8.presentation->spec().potential(), P(e8.presentation->vars(), "x^2 + y^3 + z^5"));
  auto ab = get_entry("abelian(3)");
  const auto& pres = *ab.presentation;
  for (const auto& b : generator_brackets(pres)) EXPECT_EQ(b, "0");
  EXPECT_EQ(get_entry("kleinian-an(4)").name, "kleinian-an(4)");
  EXPECT_THROW(get_entry("kleinian-an(7)"), UnsupportedError);
  EXPECT_THROW(get_entry("abelian(0)"), UnsupportedError);
}

TEST(Catalog, IdealsMatchExpectedSets) {
  for (const auto& name : catalog_names()) {
    auto e = get_entry(name);
    if (!e.presentation || !e.expected.ideals) continue;
    std::vector<Point> found;
    for (const auto& m : find_poisson_maximal(*e.presentation, e.box))
      if (!e.expected.ideal_filter || evaluate(*e.expected.ideal_filter, m.point).is_zero()) found.push_back(m.point);
    auto want = *e.expected.ideals;
    std::sort(want.begin(), want.end(), point_less);
    std::sort(found.begin(), found.end(), point_less);
    EXPECT_EQ(found, want) << name;
  }
}

TEST(Catalog, EveryEntryPasses) {
  for (const auto& name : catalog_names()) {
    auto rep = run_entry(get_entry(name));
    EXPECT_TRUE(rep.error.empty()) << name << ": " << rep.error;
    EXPECT_FALSE(rep.facts.empty()) << name;
    for (const auto& f : rep.facts) EXPECT_TRUE(f.passed || f.flagged) << name << ": " << f.name << " " << f.detail;
    EXPECT_TRUE(rep.passed()) << name;
  }
}

TEST(Catalog, ParallelRunMatchesSerial) {
  RunOptions o;
  o.max_dim = 2;
  auto a = run_all(o);
  auto b = run_all_serial(o);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].name, b[i].name);
    EXPECT_EQ(a[i].name, catalog_names()[i]);
    ASSERT_EQ(a[i].facts.size(), b[i].facts.size()) << a[i].name;
    for (std::size_t k = 0; k < a[i].facts.size(); ++k) {
      EXPECT_EQ(a[i].facts[k].name, b[i].facts[k].name);
      EXPECT_EQ(a[i].facts[k].passed, b[i].facts[k].passed);
      EXPECT_EQ(a[i].facts[k].detail, b[i].facts[k].detail);
    }
  }
}

TEST(Catalog, B2GeneratorDerivation) {
  auto d = derive_b2_m3();
  EXPECT_TRUE(d.unique);
  auto ip = *get_entry("weyl-b2").invariants;
  const auto& s = ip.ambient;
  auto v = s.vars();
  LaurentPoly g1 = P(v, "x1^2 + x2^2"), g2 = P(v, "y1^2 + y2^2"), g3 = P(v, "x1*y1 + x2*y2");
  LaurentPoly m4 = P(v, "x1*y1^3 + x2*y2^3"), m5 = P(v, "x1^3*y1 + x2^3*y2");
  EXPECT_NE(d.m3, g3);
  EXPECT_EQ(d.m3.total_degree(), 4);
  std::vector<LaurentPoly> b1 = {g2 * g3}, b2 = {g1 * g3};
  EXPECT_TRUE(express_in_span(s.bracket(g2, d.m3) - m4 * Scalar(2), b1));
  EXPECT_TRUE(express_in_span(s.bracket(g1, d.m3) + m5 * Scalar(2), b2));
  for (const auto& w : ip.automorphisms) EXPECT_EQ(w.apply(d.m3), d.m3);
}

TEST(Catalog, EntryFilesRoundTrip) {
  std::size_t files = 0;
  for (const auto& name : catalog_names()) {
    auto e = get_entry(name);
    if (!e.presentation) {
      EXPECT_THROW(entry_file(e), DomainError) << name;
      continue;
    }
    ++files;
    PresentationFile f = entry_file(e);
    std::string text = serialize(f);
    PresentationFile g = parse_presentation(text);
    EXPECT_EQ(serialize(g), text) << name;
    EXPECT_EQ(g.points, f.points) << name;
    EXPECT_EQ(g.presentation.spec().kind(), e.presentation->spec().kind()) << name;
    EXPECT_EQ(generator_brackets(g.presentation), generator_brackets(*e.presentation)) << name;
    EXPECT_EQ(strs(g.presentation.relations()), strs(e.presentation->relations())) << name;
    ASSERT_EQ(g.autos.size(), e.automorphisms.size()) << name;
    for (std::size_t i = 0; i < g.autos.size(); ++i) {
      EXPECT_EQ(g.autos[i].name, e.automorphisms[i].name);
      EXPECT_EQ(strs(g.autos[i].map.images()), strs(e.automorphisms[i].map.images()));
    }
    if (e.expected.ideals) EXPECT_EQ(g.points.size(), e.expected.ideals->size()) << name;
  }
  EXPECT_EQ(files, 20u);
}
