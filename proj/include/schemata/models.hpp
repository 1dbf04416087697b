// Non-first-order semantic structures used by the independence certificates:
// many-valued truth tables, the gen valuation, Kripke and neighborhood
// models, *-truth, plus certificate checking and truth-table search.
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "schemata/objectlevel.hpp"
#include "schemata/proof.hpp"
#include "schemata/scheme.hpp"

namespace schemata {

// ---------------------------------------------------------------------------
// Truth-table models

struct EqRule {
  enum class Kind : uint8_t { Constant, IdentityIndexed } kind = Kind::Constant;
  uint32_t value = 0;       // Constant, or value when the two variables coincide
  uint32_t value_diff = 0;  // IdentityIndexed: value for distinct variables
};

enum class QuantifierRule : uint8_t {
  Ignore,        // val(A. x f) = val(f)
  MonkALLdistr,  // val(A. x (f -> g)) = designated; val(A. x f) = val(f) otherwise
};

struct TruthTableModel {
  uint32_t value_count = 2;
  std::vector<std::vector<uint32_t>> imp_table;  // [a][b]
  std::vector<uint32_t> neg_table;
  std::set<uint32_t> designated;
  EqRule eq_rule;
  std::map<std::string, uint32_t> pred_rule;  // constant value per predicate
  QuantifierRule quantifier_rule = QuantifierRule::Ignore;

  bool is_designated(uint32_t v) const { return designated.count(v) > 0; }
  std::string validate() const;  // empty when well-formed

  // Values reachable from equality/predicate atoms under the tables. With
  // Ignore quantifiers this is exactly the set of values object formulas can
  // take, which keeps scheme validation honest on small languages.
  std::vector<uint32_t> realizable_values(bool language_nonempty) const;
};

// Evaluation of a concrete object formula; identification of variables feeds
// the IdentityIndexed equality rule through the assignment of distinct
// object variables to blocks (variables are compared by index).
uint32_t tt_eval(const TruthTableModel& t, const Formula& f);

struct TtWitness {
  std::map<uint32_t, Formula> fm_images;   // concrete falsifying images
  std::map<uint32_t, uint32_t> var_blocks; // identification pattern used
  std::string describe() const;
};

struct TtVerdict {
  bool validated = false;
  std::optional<TtWitness> witness;
  std::string note;
};

TtVerdict tt_validates(const TruthTableModel& t, const Scheme& s, const Language& lang);

// ---------------------------------------------------------------------------
// The gen valuation (val / val_i)

// Exact evaluation of the displayed clauses over object formulas in the
// language with one unary predicate P.
int gen_eval(const Formula& f);
int gen_eval_i(uint32_t i, const Formula& f);

struct GenVerdict {
  bool validated = false;
  std::optional<FormulaWithHypotheses> witness;
  std::string note;  // enumeration bound
};

// Bounded validation: object instances with formula images enumerated up to
// the height bound over a small variable window.
GenVerdict gen_validates(const Scheme& s, uint32_t height_bound);

// ---------------------------------------------------------------------------
// Kripke and neighborhood models

struct KripkeModel {
  uint32_t worlds = 1;
  std::set<std::pair<uint32_t, uint32_t>> access;
  std::map<std::string, std::set<uint32_t>> pred_truth;  // worlds where an atom holds
  bool equality_everywhere = true;

  std::string validate() const;
};

struct NeighborhoodModel {
  uint32_t worlds = 1;
  std::vector<std::vector<uint64_t>> neighborhoods;  // per world, subsets as bit masks
  std::map<std::string, uint64_t> pred_truth;        // truth sets as bit masks
  bool equality_everywhere = true;

  std::string validate() const;
};

struct ModalWitness {
  uint32_t world = 0;
  std::map<uint32_t, uint64_t> fm_sets;  // formula metavariable -> truth set
  std::string describe(uint32_t worlds) const;
};

struct ModalVerdict {
  bool validated = false;
  std::optional<ModalWitness> witness;
};

// Frame-validity check: formula metavariables range over all subsets of
// worlds, universal quantifiers over any variable act as necessity, equality
// atoms are true everywhere (when the flag is set).
ModalVerdict kripke_validates(const KripkeModel& k, const Scheme& s);
ModalVerdict neighborhood_validates(const NeighborhoodModel& n, const Scheme& s);

// Truth set of a scheme formula under a fixed assignment of formula
// metavariables to world sets (for witness re-evaluation).
uint64_t kripke_eval(const KripkeModel& k, const Formula& f,
                     const std::map<uint32_t, uint64_t>& fm_sets);
uint64_t neighborhood_eval(const NeighborhoodModel& n, const Formula& f,
                           const std::map<uint32_t, uint64_t>& fm_sets);

// ---------------------------------------------------------------------------
// *-truth (anchored truth)

struct StarTruthModel {
  FirstOrderModel base;
  uint32_t anchor = 0;
  uint32_t anchored_variable = 0;  // v0 in the writeup
};

// True in the base model whenever the anchored variable is assigned the anchor.
bool star_true(const StarTruthModel& s, const Formula& object_formula);

// ---------------------------------------------------------------------------
// Independence certificates

struct GenValuationModel {
  uint32_t height_bound = 3;
};

// Certificate for the modus-ponens independence argument: every axiom
// conclusion in the listed set has minimum instance height above the target.
struct HeightArgumentModel {};

using ModelSpec = std::variant<TruthTableModel, FirstOrderModel, KripkeModel, NeighborhoodModel,
                               GenValuationModel, StarTruthModel, HeightArgumentModel>;

struct CertificateWitness {
  std::map<uint32_t, Formula> fm_images;  // f := ...
  Substitution var_subst;                 // x := vN images for fo witnesses
  Assignment assignment;                  // v = d
  std::optional<uint32_t> world;          // Kripke / neighborhood world
};

struct IndependenceCertificate {
  std::string name;
  std::vector<std::string> validate_labels;
  std::string falsify_label;       // label into the axiom set, or empty
  std::optional<Scheme> falsify_inline;
  ModelSpec model;
  std::optional<CertificateWitness> witness;
  uint32_t surrogate_support = 1;
  Language language;  // ambient language for pools and predicate values
};

struct CertCheckLine {
  std::string label;
  bool ok = false;
  std::string detail;
};

struct CertReport {
  std::string name;
  bool ok = false;
  std::vector<CertCheckLine> lines;
  std::string bounds;
};

CertReport check_certificate(const IndependenceCertificate& c, const AxiomSet& axioms);

// Minimum height over all instances of a metaformula (formula metavariables
// can be filled by height-1 atoms, so this is the plain height).
uint32_t min_instance_height(const Formula& f);

// ---------------------------------------------------------------------------
// Truth-table search

struct TableSearchResult {
  std::optional<TruthTableModel> table;
  bool exhausted = false;    // full space enumerated without a witness
  uint64_t evaluations = 0;  // candidate evaluations spent
};

// Backtracking search over imp/neg tables with designated value 0: find a
// table validating `validate` (over all value assignments) and falsifying
// `falsify`. Deterministic row-major exploration, first witness wins.
TableSearchResult search_truth_table(uint32_t value_count, const std::vector<Scheme>& validate,
                                     const Scheme& falsify, uint64_t budget);

}  // namespace schemata
