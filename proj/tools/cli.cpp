#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "patlas/catalog.hpp"
#include "patlas/eigen.hpp"
#include "patlas/errors.hpp"
#include "patlas/parser.hpp"

namespace patlas::cli {

namespace {

class Report {
 public:
  explicit Report(std::string command) : command_(std::move(command)) {}

  void add(std::string key, std::string value) { rows_.emplace_back(std::move(key), std::move(value)); }
  void fail() { passed_ = false; }
  bool passed() const { return passed_; }

  std::string render(bool machine, int status, const std::string& error) const {
    std::ostringstream os;
    const char* verdict = !error.empty() ? "error" : (passed_ ? "pass" : "fail");
    if (machine) {
      os << "poisson-atlas-report v1\n";
      os << "command = " << command_ << "\n";
      for (const auto& [k, v] : rows_) os << k << " = " << v << "\n";
      if (!error.empty()) os << "error = " << error << "\n";
      os << "status = " << verdict << "\n";
      os << "exit = " << status << "\n";
    } else {
      os << "poisson-atlas " << command_ << "\n";
      for (const auto& [k, v] : rows_) os << "  " << k << ": " << v << "\n";
      if (!error.empty()) os << "  error: " << error << "\n";
      os << verdict << "\n";
    }
    return os.str();
  }

 private:
  std::string command_;
  std::vector<std::pair<std::string, std::string>> rows_;
  bool passed_ = true;
};

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

std::string scalars(const std::vector<Scalar>& v) {
  std::vector<std::string> s;
  for (const auto& x : v) s.push_back(x.str());
  return "{" + join(s, ", ") + "}";
}

std::string matrix_row(const Matrix& m) {
  std::string out = "[";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    out += r ? ", [" : "[";
    for (std::size_t c = 0; c < m.cols(); ++c) out += (c ? ", " : "") + m(r, c).str();
    out += "]";
  }
  return out + "]";
}

std::string lie_table(const LieAlgebra& l) {
  std::string s = l.str();
  std::vector<std::string> lines;
  std::istringstream is(s);
  for (std::string line; std::getline(is, line);) lines.push_back(line);
  return join(lines, "; ");
}

std::vector<Scalar> sorted(std::vector<Scalar> v) {
  std::sort(v.begin(), v.end(), [](const Scalar& a, const Scalar& b) { return canonical_less(a, b); });
  return v;
}

struct Options {
  std::string format = "text";
  int box_n = 4;
  int box_d = 2;
  std::string seed = "0x9E3779B9";
  int trials = kDefaultTrials;

  std::string file;
  std::string point;
  std::size_t dim = 1;
  std::string character;
  std::string module;
  std::string automorphism;
  std::string embed;
  std::string sub;
  std::string relation;
  std::string entry;
  bool serial = false;

  std::uint64_t seed_value() const { return std::stoull(seed, nullptr, 0); }
  SearchBox box(const PresentationFile& f) const { return SearchBox{box_n, box_d, f.points}; }
};

/// Poisson maximal ideals of the file's algebra: box hits on which every
/// file relation vanishes.
std::vector<PoissonMaxIdeal> file_ideals(const PresentationFile& f, const Options& o) {
  std::vector<PoissonMaxIdeal> out;
  for (auto& m : find_poisson_maximal(f.presentation, o.box(f))) {
    bool on = std::all_of(m.relation_values.begin(), m.relation_values.end(), [](const Scalar& s) { return s.is_zero(); });
    if (on) out.push_back(std::move(m));
  }
  return out;
}

void add_axioms(Report& r, const std::string& prefix, const AxiomReport& a) {
  r.add(prefix + ".axioms", a.passed ? "pass" : "fail");
  r.add(prefix + ".checks", std::to_string(a.checks));
  if (!a.passed) {
    r.add(prefix + ".violations", std::to_string(a.violations.size()));
    r.add(prefix + ".witness", a.violations.front());
    r.fail();
  }
}

void add_module(Report& r, const std::string& prefix, const PoissonModule& m) {
  const VarSet& v = *m.presentation().vars();
  r.add(prefix + ".point", m.point().str());
  r.add(prefix + ".dim", std::to_string(m.dim()));
  for (std::size_t k = 0; k < v.size(); ++k) r.add(prefix + ".action." + v.name(k), matrix_row(m.generator_actions()[k]));
}

PoissonModule lifted(const PoissonPresentation& pres, const Point& pt, std::size_t d, const std::optional<Vector>& beta) {
  LieAlgebra l = lie_from_point(pres, pt);
  if (beta) {
    if (d != 1) throw DomainError("--character builds a one-dimensional module");
    return solvable_character_module(pres, pt, *beta);
  }
  auto rec = recognize(l);
  if (rec.sl2_type()) return lift_module(pres, pt, sl2_irrep(l, d, *rec.triple, rec.radical));
  if (d == 1) return solvable_character_module(pres, pt, zero_vector(l.dim()));
  throw UnsupportedError("g(J) at " + pt.str() + " is " + rec.name() + "; only one-dimensional modules are built");
}

/// The module named by --module, or the lift at --point of dimension --dim.
PoissonModule chosen_module(const PresentationFile& f, const Options& o) {
  if (!o.module.empty()) {
    for (const auto& m : f.modules)
      if (m.name == o.module) return PoissonModule(f.presentation, m.point, m.actions);
    throw DomainError("no module named " + o.module);
  }
  if (o.point.empty()) throw DomainError("give --module or --point");
  const auto& vars = f.presentation.vars();
  std::optional<Vector> beta;
  if (!o.character.empty()) beta = parse_point(vars, o.character).coords();
  return lifted(f.presentation, parse_point(vars, o.point), o.dim, beta);
}

Vector grading_vector(const VarSet& v, const std::optional<std::string>& grading) {
  auto k = grading ? v.index_of(*grading) : std::nullopt;
  if (!k) throw DomainError("no grading variable");
  return unit_vector(v.size(), *k);
}

void cmd_ideals(const Options& o, Report& r) {
  auto f = load_presentation(o.file);
  auto ideals = file_ideals(f, o);
  r.add("box", "N=" + std::to_string(o.box_n) + " D=" + std::to_string(o.box_d));
  r.add("ideals.count", std::to_string(ideals.size()));
  for (std::size_t i = 0; i < ideals.size(); ++i) {
    std::string p = "ideal." + std::to_string(i + 1);
    r.add(p + ".point", ideals[i].point.str());
    if (ideals[i].potential_value) r.add(p + ".potential", ideals[i].potential_value->str());
  }
}

void cmd_leaves(const Options& o, Report& r) {
  auto f = load_presentation(o.file);
  auto rep = leaf_report(f.presentation, o.box(f));
  r.add("levels.count", std::to_string(rep.levels.size()));
  for (std::size_t i = 0; i < rep.levels.size(); ++i) {
    std::string p = "level." + std::to_string(i + 1);
    r.add(p + ".lambda", rep.levels[i].lambda.str());
    std::vector<std::string> pts;
    for (const auto& pt : rep.levels[i].points) pts.push_back(pt.str());
    r.add(p + ".points", join(pts, " "));
  }
  for (std::size_t i = 0; i < rep.strata.size(); ++i) r.add("stratum." + std::to_string(i + 1), rep.strata[i]);
}

void cmd_lie(const Options& o, Report& r) {
  auto f = load_presentation(o.file);
  Point pt = parse_point(f.presentation.vars(), o.point);
  LieAlgebra l = lie_from_point(f.presentation, pt);
  r.add("point", pt.str());
  r.add("lie.dim", std::to_string(l.dim()));
  r.add("lie.basis", join(l.labels(), ", "));
  for (std::size_t i = 0; i < l.dim(); ++i)
    for (std::size_t j = i + 1; j < l.dim(); ++j)
      r.add("lie.bracket." + l.labels()[i] + "." + l.labels()[j], vector_str(l.bracket_basis(i, j)));
  r.add("lie.table", lie_table(l));
}

void classify_point(Report& r, const std::string& p, const LieAlgebra& l) {
  auto rec = recognize(l);
  std::vector<std::string> dims;
  for (auto d : rec.derived_dims) dims.push_back(std::to_string(d));
  r.add(p + ".recognition", rec.name());
  r.add(p + ".derived_series", join(dims, ", "));
  r.add(p + ".nilpotent", is_nilpotent(l) ? "yes" : "no");
  if (rec.triple) {
    r.add(p + ".triple.e", vector_str(rec.triple->e));
    r.add(p + ".triple.h", vector_str(rec.triple->h));
    r.add(p + ".triple.f", vector_str(rec.triple->f));
  }
  if (rec.radical_dim()) r.add(p + ".radical_weights", scalars(sorted(rec.radical_weights)));
  auto simple = classify_simple_modules(l, rec);
  r.add(p + ".simple_modules", simple.description);
  if (!rec.sl2_type()) r.add(p + ".character_space_dim", std::to_string(simple.character_space_dim));
}

void cmd_classify(const Options& o, Report& r) {
  auto f = load_presentation(o.file);
  std::vector<Point> pts;
  if (!o.point.empty()) {
    pts.push_back(parse_point(f.presentation.vars(), o.point));
  } else {
    for (const auto& m : file_ideals(f, o)) pts.push_back(m.point);
  }
  r.add("ideals.count", std::to_string(pts.size()));
  for (std::size_t i = 0; i < pts.size(); ++i) {
    std::string p = "ideal." + std::to_string(i + 1);
    r.add(p + ".point", pts[i].str());
    classify_point(r, p, lie_from_point(f.presentation, pts[i]));
  }
}

void cmd_module(const Options& o, Report& r) {
  auto f = load_presentation(o.file);
  auto m = chosen_module(f, o);
  add_module(r, "module", m);
  add_axioms(r, "module", verify_poisson_axioms(m, o.trials, o.seed_value()));
  r.add("module.simple", is_simple(restrict_to_lie(m)) ? "yes" : "no");
  if (f.grading) {
    auto k = f.presentation.vars()->index_of(*f.grading);
    if (k) r.add("module.spectrum." + *f.grading, scalars(sorted(eigen_small(m.lie_action(f.presentation.var(*k))).spectrum())));
  }
}

void cmd_verify(const Options& o, Report& r) {
  auto f = load_presentation(o.file);
  if (o.module.empty()) throw DomainError("verify needs --module");
  auto m = chosen_module(f, o);
  r.add("module", o.module);
  r.add("module.point", m.point().str());
  r.add("module.dim", std::to_string(m.dim()));
  add_axioms(r, "module", verify_poisson_axioms(m, o.trials, o.seed_value()));
}

void cmd_twist(const Options& o, Report& r) {
  auto f = load_presentation(o.file);
  auto it = std::find_if(f.autos.begin(), f.autos.end(), [&](const AutoDecl& a) { return a.name == o.automorphism; });
  if (it == f.autos.end()) throw DomainError("no automorphism named " + o.automorphism);
  auto check = verify_poisson_map(it->map, f.presentation, f.presentation);
  r.add("auto", it->name);
  r.add("auto.poisson", check.passed ? "yes" : "no");
  if (!check.passed) {
    r.add("auto.witness", check.witness);
    r.fail();
    return;
  }
  auto m = chosen_module(f, o);
  auto t = twist(m, it->map);
  r.add("source.point", m.point().str());
  add_module(r, "twisted", t);
  add_axioms(r, "twisted", verify_poisson_axioms(t, o.trials, o.seed_value()));
  r.add("twisted.simple", is_simple(restrict_to_lie(t)) ? "yes" : "no");
}

void cmd_restrict(const Options& o, Report& r) {
  auto f = load_presentation(o.file);
  auto sub = load_presentation(o.sub);
  auto it = std::find_if(f.embeds.begin(), f.embeds.end(), [&](const EmbedDecl& e) { return e.name == o.embed; });
  if (it == f.embeds.end()) throw DomainError("no embedding named " + o.embed);
  if (it->map.source()->names() != sub.presentation.vars()->names())
    throw DomainError("embedding " + o.embed + " does not match the variables of " + o.sub);
  SubstitutionMap emb(sub.presentation.vars(), it->map.target(), it->map.images());
  auto check = verify_poisson_map(emb, sub.presentation, f.presentation);
  r.add("embed", it->name);
  r.add("embed.poisson", check.passed ? "yes" : "no");
  if (!check.passed) {
    r.add("embed.witness", check.witness);
    r.fail();
    return;
  }
  auto m = chosen_module(f, o);
  auto res = restrict_to_subalgebra(m, emb, sub.presentation);
  r.add("source.point", m.point().str());
  r.add("restricted.point", res.point().str());
  r.add("restricted.dim", std::to_string(res.dim()));
  add_axioms(r, "restricted", verify_poisson_axioms(res, o.trials, o.seed_value()));
  auto rep = restrict_to_lie(res);
  r.add("restricted.simple", is_simple(rep) ? "yes" : "no");
  std::optional<Vector> grading;
  if (sub.grading) grading = grading_vector(*sub.presentation.vars(), sub.grading);
  auto ss = is_semisimple(rep, grading);
  r.add("restricted.semisimple", !ss.decided ? "undecided" : (ss.semisimple ? "yes" : "no"));
  if (ss.semisimple) {
    std::vector<std::string> dims;
    for (const auto& s : ss.summands) dims.push_back(std::to_string(s.dim()));
    r.add("restricted.summand_dims", join(dims, ", "));
  } else if (!ss.witness.empty()) {
    r.add("restricted.witness", ss.witness);
  }
  if (sub.grading) {
    const auto& sv = sub.presentation.vars();
    auto k = *sv->index_of(*sub.grading);
    r.add("restricted.spectrum." + *sub.grading, scalars(sorted(eigen_small(res.lie_action(sub.presentation.var(k))).spectrum())));
  }
}

/// Polynomial text over the file's variables, where a free `f` names the
/// potential of an exact or scaled bracket.
LaurentPoly parse_relation(const PoissonPresentation& pres, const std::string& text) {
  const VarSet& v = *pres.vars();
  const auto& pot = pres.spec().potential();
  if (!pot || v.index_of("f")) return parse_polynomial(pres.vars(), text);
  std::vector<std::string> names = v.names();
  std::vector<bool> laurent;
  for (std::size_t i = 0; i < v.size(); ++i) laurent.push_back(v.is_laurent(i));
  names.push_back("f");
  laurent.push_back(false);
  VarSetPtr ext = make_varset(names, laurent);
  std::vector<LaurentPoly> images;
  for (std::size_t i = 0; i < v.size(); ++i) images.push_back(pres.var(i));
  images.push_back(*pot);
  return SubstitutionMap(ext, pres.vars(), images).apply(parse_polynomial(ext, text));
}

void cmd_homogeneity(const Options& o, Report& r) {
  auto f = load_presentation(o.file);
  std::optional<LaurentPoly> rel;
  if (!o.relation.empty()) {
    rel = parse_relation(f.presentation, o.relation);
    r.add("relation", rel->str());
  }
  auto rep = homogeneity_report(f.presentation, file_ideals(f, o), rel);
  r.add("ideals.count", std::to_string(rep.ideals.size()));
  for (std::size_t i = 0; i < rep.ideals.size(); ++i) {
    std::string p = "ideal." + std::to_string(i + 1);
    r.add(p + ".point", rep.ideals[i].point.str());
    r.add(p + ".recognition", rep.ideals[i].recognition.name());
    r.add(p + ".contribution", rep.ideals[i].contribution);
  }
  r.add("sl2_ideals", std::to_string(rep.t));
  r.add("counts", rep.counts);
  r.add("verdict", rep.verdict);
}

RunOptions run_options(const Options& o) {
  RunOptions ro;
  ro.trials = o.trials;
  ro.seed = o.seed_value();
  return ro;
}

void add_entry_facts(Report& r, const EntryReport& e) {
  r.add("entry", e.name);
  r.add("entry.citation", e.citation);
  for (std::size_t i = 0; i < e.facts.size(); ++i) {
    const Fact& fact = e.facts[i];
    std::string p = "fact." + std::to_string(i + 1);
    r.add(p, std::string(fact.flagged ? "note" : (fact.passed ? "pass" : "fail")) + " " + fact.name);
    r.add(p + ".citation", fact.citation);
    if (!fact.detail.empty()) r.add(p + ".detail", fact.detail);
  }
  if (!e.error.empty()) r.add("entry.error", e.error);
  r.add("entry.status", e.passed() ? "pass" : "fail");
  if (!e.passed()) r.fail();
}

void cmd_catalog_list(Report& r) {
  auto names = catalog_names();
  r.add("entries.count", std::to_string(names.size()));
  for (const auto& n : names) r.add("entry." + n, get_entry(n).summary);
}

void cmd_catalog_run(const Options& o, Report& r) { add_entry_facts(r, run_entry(get_entry(o.entry), run_options(o))); }

void cmd_catalog_run_all(const Options& o, Report& r) {
  auto reports = o.serial ? run_all_serial(run_options(o)) : run_all(run_options(o));
  std::size_t facts = 0, failed = 0, notes = 0, bad_entries = 0;
  for (const auto& e : reports) {
    std::size_t ef = 0;
    for (const auto& f : e.facts) {
      ++facts;
      if (f.flagged) ++notes;
      if (!f.passed) ++failed, ++ef;
    }
    std::string status = e.passed() ? "pass" : "fail";
    r.add("entry." + e.name, status + " " + std::to_string(e.facts.size()) + " facts");
    if (!e.error.empty()) r.add("entry." + e.name + ".error", e.error);
    for (const auto& f : e.facts)
      if (!f.passed) r.add("entry." + e.name + ".failed", f.name + ": " + f.detail);
    if (!e.passed()) ++bad_entries;
  }
  r.add("entries.count", std::to_string(reports.size()));
  r.add("entries.failed", std::to_string(bad_entries));
  r.add("facts.count", std::to_string(facts));
  r.add("facts.failed", std::to_string(failed));
  r.add("facts.notes", std::to_string(notes));
  if (bad_entries) r.fail();
}

void cmd_catalog_show(const Options& o, Report& r, std::string& raw) {
  auto e = get_entry(o.entry);
  r.add("entry", e.name);
  r.add("summary", e.summary);
  if (!e.presentation) {
    const auto& ip = *e.invariants;
    r.add("ambient.vars", join(ip.ambient.vars()->names(), ", "));
    r.add("ambient.bracket", bracket_clause(ip.ambient.spec()));
    for (std::size_t i = 0; i < ip.generators.size(); ++i)
      r.add("generator." + ip.generator_vars->name(i), ip.generators[i].str());
    for (std::size_t i = 0; i < ip.relations.size(); ++i) r.add("relation." + std::to_string(i + 1), ip.relations[i].str());
    return;
  }
  raw = serialize(entry_file(e));
  std::istringstream is(raw);
  for (std::string line; std::getline(is, line);) r.add("line", line);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Poisson maximal ideals, g(J) and finite-dimensional Poisson modules", "poisson-atlas"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--format", o.format, "text or machine")->check(CLI::IsMember({"text", "machine"}));
  app.add_option("--box-n", o.box_n, "numerator bound N of the search box")->check(CLI::PositiveNumber);
  app.add_option("--box-d", o.box_d, "denominator bound D of the search box")->check(CLI::PositiveNumber);
  app.add_option("--seed", o.seed, "sampler seed (decimal or 0x hex)");
  app.add_option("--trials", o.trials, "random pairs per axiom check")->check(CLI::NonNegativeNumber);

  std::function<void(Report&)> action;
  std::string shown;
  auto file_cmd = [&](const std::string& name, const std::string& help, auto fn) {
    auto* c = app.add_subcommand(name, help);
    c->add_option("file", o.file, "presentation file")->required();
    c->callback([&, fn] { action = [&, fn](Report& r) { fn(o, r); }; });
    return c;
  };
  auto module_flags = [&](CLI::App* c) {
    c->add_option("--module", o.module, "module declared in the file");
    c->add_option("--point", o.point, "point of a Poisson maximal ideal");
    c->add_option("--dim", o.dim, "module dimension")->check(CLI::PositiveNumber);
    c->add_option("--character", o.character, "character of g(J) for a one-dimensional module");
  };

  file_cmd("ideals", "Poisson maximal ideals in the search box", cmd_ideals);
  file_cmd("leaves", "symplectic-leaf partition of a potential bracket", cmd_leaves);
  file_cmd("lie", "structure constants of g(J) at a point", cmd_lie)->add_option("--point", o.point)->required();
  file_cmd("classify", "recognize g(J) and its simple modules", cmd_classify)->add_option("--point", o.point);
  module_flags(file_cmd("module", "lift a g(J)-module to a Poisson module", cmd_module));
  file_cmd("verify", "check the Poisson module axioms", cmd_verify)->add_option("--module", o.module)->required();
  auto* tw = file_cmd("twist", "twist a module by an automorphism", cmd_twist);
  tw->add_option("--auto", o.automorphism)->required();
  module_flags(tw);
  auto* rs = file_cmd("restrict", "restrict a module along an embedding", cmd_restrict);
  rs->add_option("--embed", o.embed)->required();
  rs->add_option("--sub", o.sub, "presentation file of the subalgebra")->required();
  module_flags(rs);
  file_cmd("homogeneity", "count simple modules per dimension", cmd_homogeneity)->add_option("--relation", o.relation);

  auto* cat = app.add_subcommand("catalog", "built-in examples");
  cat->require_subcommand(1);
  cat->add_subcommand("list", "entry names")->callback([&] { action = [&](Report& r) { cmd_catalog_list(r); }; });
  auto* run1 = cat->add_subcommand("run", "check one entry");
  run1->add_option("name", o.entry)->required();
  run1->callback([&] { action = [&](Report& r) { cmd_catalog_run(o, r); }; });
  auto* all = cat->add_subcommand("run-all", "check every entry");
  all->add_flag("--serial", o.serial, "run entries on one thread");
  all->callback([&] { action = [&](Report& r) { cmd_catalog_run_all(o, r); }; });
  auto* show = cat->add_subcommand("show", "presentation file of an entry");
  show->add_option("name", o.entry)->required();
  show->callback([&] { action = [&](Report& r) { cmd_catalog_show(o, r, shown); }; });

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  Report report(join(args, " "));
  int status = 0;
  std::string error;
  try {
    action(report);
    if (!report.passed()) status = 1;
  } catch (const ParseError& e) {
    status = 2;
    error = e.what();
  } catch (const UnsupportedError& e) {
    status = 3;
    error = e.what();
  } catch (const std::invalid_argument& e) {
    status = 2;
    error = std::string("bad number: ") + e.what();
  } catch (const std::exception& e) {
    status = 1;
    error = e.what();
  }
  const bool machine = o.format == "machine";
  if (!machine && !shown.empty() && error.empty()) {
    out << shown;
  } else {
    out << report.render(machine, status, error);
  }
  if (!error.empty()) err << "poisson-atlas: " << error << "\n";
  return status;
}

}  // namespace patlas::cli
