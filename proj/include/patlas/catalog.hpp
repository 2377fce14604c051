#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "patlas/classify.hpp"
#include "patlas/ideals.hpp"
#include "patlas/lie_builder.hpp"
#include "patlas/modules.hpp"
#include "patlas/parser.hpp"

namespace patlas {

struct Fact {
  std::string name;
  std::string citation;  // quoted source claim
  bool passed = true;
  bool flagged = false;  // informational note, never a failure
  std::string detail;
};

class FactLog {
 public:
  bool check(std::string name, std::string citation, bool ok, std::string detail = {});
  void note(std::string name, std::string citation, std::string detail);
  const std::vector<Fact>& facts() const { return facts_; }
  bool passed() const;

 private:
  std::vector<Fact> facts_;
};

struct RecognitionFact {
  Point point;
  std::string tag;  // LieRecognition::name()
  std::string citation;
};

struct HomogeneityFact {
  std::string relation_label;  // empty for the whole ring
  std::optional<LaurentPoly> relation;
  std::string verdict;
  std::string citation;
};

/// Displayed constant: [u_i, u_j] has coordinates `expected`.
struct ConstantFact {
  std::size_t i;
  std::size_t j;
  Vector expected;
  std::string citation;
};

struct ExpectedFacts {
  std::optional<std::vector<Point>> ideals;  // exact set in the box
  std::string ideals_citation;
  std::optional<LaurentPoly> ideal_filter;   // keep only ideals containing it
  std::vector<RecognitionFact> recognitions;
  std::vector<HomogeneityFact> homogeneity;
  std::vector<ConstantFact> constants;       // invariant presentation only
  std::string constants_citation;
  std::optional<std::string> invariant_recognition;
  std::string invariant_recognition_citation;
  bool invariant_bracket_negated = false;    // invariants induce -{-,-} of the presentation
  std::vector<std::string> module_facts;     // checked by the entry procedure
};

struct NamedMap {
  std::string name;
  SubstitutionMap map;
};

struct Embedding {
  std::string name;
  SubstitutionMap map;  // sub variables -> ambient polynomials
  std::shared_ptr<const PoissonPresentation> sub;
};

struct RunOptions {
  int trials = kDefaultTrials;
  std::uint64_t seed = kDefaultSeed;
  std::size_t max_dim = 4;
};

struct CatalogEntry;
using EntryProcedure = std::function<void(const CatalogEntry&, const RunOptions&, FactLog&)>;

struct CatalogEntry {
  std::string name;
  std::string citation;
  std::string summary;
  std::optional<PoissonPresentation> presentation;
  std::optional<InvariantPresentation> invariants;
  std::optional<ActionTable> table;
  SearchBox box;
  std::vector<NamedMap> automorphisms;
  std::vector<Embedding> embeddings;
  std::string grading;  // variable or generator naming the grading element
  ExpectedFacts expected;
  EntryProcedure procedure;
};

struct EntryReport {
  std::string name;
  std::string citation;
  std::vector<Fact> facts;
  std::string error;  // exception text if the run aborted
  bool passed() const;
};

/// Entry names in catalog order (parametrized families at their sampled values).
std::vector<std::string> catalog_names();

/// Accepts the listed names plus "kleinian-an(n)", "kleinian-d(n)",
/// "abelian(n)" and the short forms "e6", "e7", "e8".
CatalogEntry get_entry(const std::string& name);

EntryReport run_entry(const CatalogEntry& entry, const RunOptions& opts = {});

/// Presentation file of an entry with a presentation: expected ideals as
/// points, automorphisms, embeddings and a variable grading. Throws
/// DomainError for invariant-only entries.
PresentationFile entry_file(const CatalogEntry& entry);

/// Every entry of catalog_names(), fanned out over threads; the result is
/// in catalog order.
std::vector<EntryReport> run_all(const RunOptions& opts = {});
std::vector<EntryReport> run_all_serial(const RunOptions& opts = {});

/// Weight-zero bidegree-(2,2) invariant m3 of the B2 presentation solving
/// [g2, m3] = 2 m4 and [g1, m3] = -2 m5 modulo products of generators.
struct B2Derivation {
  LaurentPoly m3;
  std::vector<std::string> transcript;
  bool unique = false;
};
B2Derivation derive_b2_m3();

}  // namespace patlas
