#include "patlas/catalog.hpp"

#include <algorithm>

#include "patlas/errors.hpp"

namespace patlas {

namespace {

constexpr const char* kJacobiCite = "A is a Lie algebra under {-, -}";
constexpr const char* kRoundTripCite = "M*† = M";
constexpr const char* kLiftCite = "N† = ᶠN as a Lie module over A";
constexpr const char* kDistinctCite = "bijection Γ from the set";
constexpr const char* kTwistCite = "{a, m}_{πM} = {π(a), m}_M";
constexpr const char* kInvarianceCite = "B^π may be identified with A_0";
constexpr int kTwistSamples = 8;

std::string points_str(const std::vector<Point>& pts) {
  std::string s;
  for (const auto& p : pts) s += (s.empty() ? "" : " ") + p.str();
  return s.empty() ? "none" : s;
}

bool contains_point(const std::vector<Point>& pts, const Point& p) {
  return std::find(pts.begin(), pts.end(), p) != pts.end();
}

struct SlIdeal {
  Point point;
  LieAlgebra algebra;
  LieRecognition rec;
};

void run_presentation(const CatalogEntry& e, const RunOptions& o, FactLog& log) {
  const PoissonPresentation& pres = *e.presentation;
  JacobiCheck jc = verify_jacobi(pres.spec());
  log.check("bracket satisfies Jacobi", kJacobiCite, jc.passed);
  std::vector<PoissonMaxIdeal> all = find_poisson_maximal(pres, e.box);
  std::vector<Point> found;
  for (const auto& m : all) {
    if (e.expected.ideal_filter && !evaluate(*e.expected.ideal_filter, m.point).is_zero()) continue;
    found.push_back(m.point);
  }
  if (e.expected.ideals) {
    std::vector<Point> want = *e.expected.ideals;
    std::sort(want.begin(), want.end(), point_less);
    log.check("Poisson maximal ideals in the search box", e.expected.ideals_citation, want == found,
              "found " + points_str(found));
  }
  std::vector<SlIdeal> sl;
  for (const auto& p : found) {
    LieAlgebra l = lie_from_point(pres, p);
    LieRecognition r = recognize(l);
    if (r.sl2_type()) sl.push_back({p, l, r});
    for (const auto& rf : e.expected.recognitions) {
      if (rf.point != p) continue;
      log.check("g(J) at " + p.str() + " is " + rf.tag, rf.citation, r.name() == rf.tag, "recognized " + r.name());
    }
  }
  for (const auto& rf : e.expected.recognitions) {
    if (!contains_point(found, rf.point)) {
      log.check("g(J) at " + rf.point.str() + " is " + rf.tag, rf.citation, false, "point not among the ideals");
    }
  }
  for (const auto& h : e.expected.homogeneity) {
    HomogeneityReport rep = homogeneity_report(pres, all, h.relation);
    std::string what = h.relation_label.empty() ? "homogeneity" : "homogeneity modulo " + h.relation_label;
    log.check(what + ": " + h.verdict, h.citation, rep.verdict == h.verdict, rep.verdict + "; " + rep.counts);
  }
  for (const auto& s : sl) {
    bool axioms = true;
    bool trip = true;
    bool simple = true;
    std::string witness;
    for (std::size_t d = 1; d <= o.max_dim; ++d) {
      LieRep n = sl2_irrep(s.algebra, d, *s.rec.triple, s.rec.radical);
      PoissonModule m = lift_module(pres, s.point, n);
      AxiomReport ax = verify_poisson_axioms(m, o.trials, o.seed);
      if (!ax.passed) {
        axioms = false;
        if (witness.empty()) witness = "d = " + std::to_string(d) + ": " + ax.violations.front();
      }
      LieRep back = restrict_to_lie(m);
      PoissonModule again = lift_module(pres, s.point, back);
      if (back.matrices() != n.matrices() || !(again == m)) trip = false;
      if (!is_simple(back)) simple = false;
    }
    const std::string at = " at " + s.point.str() + " for d <= " + std::to_string(o.max_dim);
    log.check("lifted modules satisfy the Poisson module axioms" + at, kLiftCite, axioms, witness);
    log.check("restrict(lift(N)) = N and lift(restrict(M)) = M" + at, kRoundTripCite, trip);
    log.check("lifted modules are simple" + at, kLiftCite, simple);
  }
  if (sl.size() > 1) {
    std::vector<PoissonModule> mods;
    for (const auto& s : sl) mods.push_back(lift_module(pres, s.point, sl2_irrep(s.algebra, 2, *s.rec.triple, s.rec.radical)));
    bool distinct = true;
    for (std::size_t i = 0; i < mods.size(); ++i) {
      for (std::size_t j = i + 1; j < mods.size(); ++j) distinct &= !isomorphic(mods[i], mods[j]);
    }
    log.check("lifted modules at distinct points are not isomorphic", kDistinctCite, distinct);
  }
  for (const auto& a : e.automorphisms) {
    MapCheck mc = verify_poisson_map(a.map, pres, pres);
    log.check("automorphism " + a.name + " is Poisson", "then π is Poisson", mc.passed, mc.witness);
    if (!mc.passed) continue;
    std::vector<Point> images;
    bool consistent = true;
    for (const auto& s : sl) {
      PoissonModule m = lift_module(pres, s.point, sl2_irrep(s.algebra, 2, *s.rec.triple, s.rec.radical));
      PoissonModule t = twist(m, a.map);
      images.push_back(t.point());
      consistent &= is_simple(restrict_to_lie(t)) && verify_poisson_axioms(t, o.trials, o.seed).passed;
      PolySampler sampler(o.seed);
      for (int k = 0; k < kTwistSamples; ++k) {
        LaurentPoly p = sampler.sample(pres.vars());
        consistent &= t.lie_action(p) == m.lie_action(a.map.apply(p));
        consistent &= t.assoc_action(p) == m.assoc_action(a.map.apply(p));
      }
    }
    std::vector<Point> sorted = images;
    std::sort(sorted.begin(), sorted.end(), point_less);
    std::vector<Point> base;
    for (const auto& s : sl) base.push_back(s.point);
    log.check("twisting by " + a.name + " permutes the sl2-type annihilators", kTwistCite, sorted == base,
              "images " + points_str(images));
    log.check("twists by " + a.name + " are simple Poisson modules acting through " + a.name, kTwistCite, consistent);
  }
}

void run_invariants(const CatalogEntry& e, FactLog& log) {
  const InvariantPresentation& ip = *e.invariants;
  InvarianceCheck inv = verify_invariance(ip);
  std::string why;
  for (const auto& v : inv.violations) why += (why.empty() ? "" : "; ") + v;
  log.check("generators are invariant and relations hold", kInvarianceCite, inv.passed, why);
  for (std::size_t k = 0; k < ip.automorphisms.size(); ++k) {
    MapCheck mc = verify_poisson_map(ip.automorphisms[k], ip.ambient, ip.ambient);
    log.check("group generator " + std::to_string(k + 1) + " acts by Poisson automorphisms", "Poisson automorphism",
              mc.passed, mc.witness);
  }
  LieAlgebra l = lie_from_invariants(ip);
  for (const auto& c : e.expected.constants) {
    Vector got = l.bracket_basis(c.i, c.j);
    log.check("[" + l.labels()[c.i] + ", " + l.labels()[c.j] + "] from the invariants", c.citation, got == c.expected,
              "computed " + vector_str(got));
  }
  if (e.expected.invariant_recognition) {
    LieRecognition r = recognize(l);
    log.check("g(J) from the invariants is " + *e.expected.invariant_recognition, e.expected.invariant_recognition_citation,
              r.name() == *e.expected.invariant_recognition, "recognized " + r.name());
  }
  if (e.presentation && same_varset(e.presentation->vars(), ip.generator_vars)) {
    LieAlgebra lp = lie_from_point(*e.presentation, ip.base_point());
    if (e.expected.invariant_bracket_negated) {
      StructureConstants c = lp.constants();
      for (auto& row : c)
        for (auto& col : row)
          for (auto& s : col) s = -s;
      lp = LieAlgebra(lp.labels(), c);
    }
    log.check(e.expected.invariant_bracket_negated ? "invariant Lie algebra is the linearized one with opposite bracket"
                                                   : "invariant and linearized Lie algebras agree",
              "these Lie algebras are isomorphic", lp == l);
  }
}

}  // namespace

bool FactLog::check(std::string name, std::string citation, bool ok, std::string detail) {
  facts_.push_back({std::move(name), std::move(citation), ok, false, std::move(detail)});
  return ok;
}

void FactLog::note(std::string name, std::string citation, std::string detail) {
  facts_.push_back({std::move(name), std::move(citation), true, true, std::move(detail)});
}

bool FactLog::passed() const {
  return std::all_of(facts_.begin(), facts_.end(), [](const Fact& f) { return f.passed; });
}

bool EntryReport::passed() const {
  return error.empty() && !facts.empty() &&
         std::all_of(facts.begin(), facts.end(), [](const Fact& f) { return f.passed && !f.citation.empty(); });
}

PresentationFile entry_file(const CatalogEntry& entry) {
  if (!entry.presentation) throw DomainError("entry " + entry.name + " has no presentation");
  PresentationFile f{*entry.presentation, {}, {}, {}, {}, std::nullopt};
  if (entry.expected.ideals) f.points = *entry.expected.ideals;
  for (const auto& a : entry.automorphisms) f.autos.push_back(AutoDecl{a.name, a.map});
  for (const auto& e : entry.embeddings)
    if (same_varset(e.map.target(), f.presentation.vars()))
      f.embeds.push_back(EmbedDecl{e.name, e.map});
  if (f.presentation.vars()->index_of(entry.grading)) f.grading = entry.grading;
  return f;
}

EntryReport run_entry(const CatalogEntry& entry, const RunOptions& opts) {
  EntryReport rep{entry.name, entry.citation, {}, {}};
  FactLog log;
  try {
    if (entry.presentation) run_presentation(entry, opts, log);
    if (entry.invariants) run_invariants(entry, log);
    if (entry.procedure) entry.procedure(entry, opts, log);
  } catch (const Error& e) {
    rep.error = e.what();
  }
  rep.facts = log.facts();
  return rep;
}

std::vector<EntryReport> run_all(const RunOptions& opts) {
  const std::vector<std::string> names = catalog_names();
  std::vector<EntryReport> out(names.size());
  const long n = static_cast<long>(names.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (long i = 0; i < n; ++i) {
    try {
      out[i] = run_entry(get_entry(names[i]), opts);
    } catch (const Error& e) {
      out[i] = EntryReport{names[i], {}, {}, e.what()};
    }
  }
  return out;
}

std::vector<EntryReport> run_all_serial(const RunOptions& opts) {
  std::vector<EntryReport> out;
  for (const auto& name : catalog_names()) {
    try {
      out.push_back(run_entry(get_entry(name), opts));
    } catch (const Error& e) {
      out.push_back(EntryReport{name, {}, {}, e.what()});
    }
  }
  return out;
}

}  // namespace patlas
