#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "schemata/axiomdb.hpp"
#include "schemata/models.hpp"

using namespace schemata;

namespace {

Formula F(const std::string& s) { return parse_formula(s); }

TruthTableModel minimp_table() {
  TruthTableModel t;
  t.value_count = 5;
  t.imp_table = {{0, 1, 1, 1, 1}, {0, 0, 0, 0, 0}, {0, 0, 0, 0, 0}, {0, 0, 4, 0, 4}, {0, 0, 3, 3, 0}};
  t.neg_table = {2, 0, 0, 1, 1};
  t.designated = {0};
  t.eq_rule = {EqRule::Kind::Constant, 0, 0};
  t.pred_rule["P"] = 3;
  t.quantifier_rule = QuantifierRule::Ignore;
  return t;
}

}  // namespace

TEST_CASE("tt_eval walks the minimp table") {
  TruthTableModel t = minimp_table();
  // value(0 -> 1) = 1, row 0
  CHECK(t.imp_table[0][1] == 1);
  Language lang{{"P", 1}};
  // the footnote assignment phi=0 psi=3 chi=0 theta=0 tau=2 gives value 1
  Formula minimp_inst = parse_formula(
      "( v0 = v0 -> ( ( P v0 -> v0 = v0 ) -> ( ( ( v0 = v0 -> P v0 ) -> ( v0 = v0 -> -. v0 = v0 ) ) "
      "-> ( P v0 -> -. v0 = v0 ) ) ) )",
      lang);
  CHECK(tt_eval(t, minimp_inst) == 1);
  CHECK(!t.is_designated(1));
}

TEST_CASE("the minimp table validates the rest of TMM and falsifies minimp") {
  TruthTableModel t = minimp_table();
  Language lang{{"P", 1}};
  const AxiomDb& db = axiom_db();
  for (const std::string& label :
       {"mp", "peirce", "contrap", "notelim", "gen", "ALLdistr", "spec", "modal5", "vacGen",
        "ALLcomm", "EQrefl", "EQsymm", "EQtrans", "denot", "subst", "ALLeq", "genEq"}) {
    TtVerdict v = tt_validates(t, db.get(label).scheme, lang);
    CHECK_MESSAGE(v.validated, label);
  }
  TtVerdict v = tt_validates(t, db.get("minimp").scheme, lang);
  CHECK(!v.validated);
  REQUIRE(v.witness.has_value());
  // the witness realizes concrete formulas; re-evaluate the conclusion
  Substitution tau;
  for (const auto& [i, f] : v.witness->fm_images) tau.set_fm(i, f);
  FormulaWithHypotheses inst = object_instantiate(tau, db.get("minimp").scheme);
  CHECK(!t.is_designated(tt_eval(t, inst.conclusion)));
}

TEST_CASE("the Goedel table falsifies peirce only") {
  TruthTableModel t;
  t.value_count = 3;
  t.imp_table = {{0, 1, 2}, {0, 0, 2}, {0, 0, 0}};
  t.neg_table = {2, 2, 0};
  t.designated = {0};
  t.eq_rule = {EqRule::Kind::Constant, 0, 0};
  t.pred_rule["P"] = 1;
  Language lang{{"P", 1}};

  // peirce at phi=1 psi=2: ((1->2)->1)->1 = (2->1)->1 = 0->1 = 1
  CHECK(t.imp_table[t.imp_table[t.imp_table[1][2]][1]][1] == 1);

  CHECK(!tt_validates(t, axiom_db().get("peirce").scheme, lang).validated);
  for (const std::string& label : {"mp", "minimp", "contrap", "notelim", "subst", "genEq"})
    CHECK_MESSAGE(tt_validates(t, axiom_db().get(label).scheme, lang).validated, label);
}

TEST_CASE("the contrap table needs no predicate") {
  TruthTableModel t;
  t.value_count = 3;
  t.imp_table = {{0, 1, 1}, {0, 0, 0}, {0, 0, 0}};
  t.neg_table = {1, 0, 1};
  t.designated = {0};
  t.eq_rule = {EqRule::Kind::IdentityIndexed, 0, 2};
  Language empty;

  TtVerdict v = tt_validates(t, axiom_db().get("contrap").scheme, empty);
  REQUIRE(!v.validated);
  for (const std::string& label : {"mp", "minimp", "peirce", "notelim", "EQrefl", "EQsymm",
                                   "EQtrans", "denot", "subst", "ALLeq", "genEq"})
    CHECK_MESSAGE(tt_validates(t, axiom_db().get(label).scheme, empty).validated, label);
}

TEST_CASE("realizable values respect the empty language") {
  TruthTableModel t = minimp_table();
  t.pred_rule.clear();
  // from the equality constant 0 alone: 0, neg 0 = 2, 0->0 = 0, 2->... values {0,1,2}
  auto vals = t.realizable_values(false);
  CHECK(vals == std::vector<uint32_t>{0, 1, 2});
  // minimp cannot be falsified over the empty language with this table
  Language empty;
  CHECK(tt_validates(t, axiom_db().get("minimp").scheme, empty).validated);
}

TEST_CASE("gen valuation matches the displayed clauses") {
  Language lang{{"P", 1}};
  CHECK(gen_eval(parse_formula("P v0", lang)) == 1);
  CHECK(gen_eval(parse_formula("A. v0 P v0", lang)) == 0);
  CHECK(gen_eval(F("A. v1 -. v1 = v0")) == 0);
  CHECK(gen_eval(F("A. v0 -. v0 = v0")) == 0);  // even when i = j
  CHECK(gen_eval(F("( v0 = v0 -> -. A. v1 -. v1 = v0 )")) == 1);
  CHECK(gen_eval_i(2, F("A. v2 v2 = v0")) == 1);
  CHECK(gen_eval_i(0, F("-. A. v1 v1 = v0")) == 1);
}

TEST_CASE("gen_eval_i is 1 on formulas without free v_i") {
  Language lang{{"P", 1}};
  std::vector<Formula> pool;
  std::vector<Formula> atoms = {F("v0 = v0"), F("v0 = v1"), F("v1 = v0"),
                                parse_formula("P v0", lang), parse_formula("P v1", lang)};
  pool = atoms;
  std::vector<Formula> prev = atoms;
  for (int h = 2; h <= 4; ++h) {
    std::vector<Formula> next;
    for (const Formula& f : prev) {
      next.push_back(Formula::negation(f));
      next.push_back(Formula::forall(object_var(0), f));
      next.push_back(Formula::forall(object_var(1), f));
      if (h <= 3)
        for (const Formula& g : atoms) next.push_back(Formula::implies(f, g));
    }
    pool.insert(pool.end(), next.begin(), next.end());
    prev = std::move(next);
  }
  for (const Formula& f : pool) {
    auto fv = free_object_vars(f);
    for (uint32_t i = 0; i <= 3; ++i)
      if (!fv.count(i)) CHECK_MESSAGE(gen_eval_i(i, f) == 1, render(f));
  }
  // quantifier swap symmetry of val
  for (const Formula& f : pool) {
    Formula ab = Formula::forall(object_var(0), Formula::forall(object_var(1), f));
    Formula ba = Formula::forall(object_var(1), Formula::forall(object_var(0), f));
    CHECK(gen_eval(ab) == gen_eval(ba));
  }
}

TEST_CASE("gen model validates TMM minus gen and falsifies gen") {
  const AxiomDb& db = axiom_db();
  for (const std::string& label :
       {"mp", "minimp", "peirce", "contrap", "notelim", "ALLdistr", "spec", "modal5", "vacGen",
        "ALLcomm", "EQrefl", "EQsymm", "EQtrans", "denot", "subst", "ALLeq", "genEq"}) {
    GenVerdict v = gen_validates(db.get(label).scheme, 3);
    CHECK_MESSAGE(v.validated, label << ": " << (v.witness ? render(v.witness->conclusion) : ""));
  }
  GenVerdict v = gen_validates(db.get("gen").scheme, 3);
  REQUIRE(!v.validated);
  REQUIRE(v.witness.has_value());
}

TEST_CASE("kripke model for modal5") {
  KripkeModel k;
  k.worlds = 2;
  k.access = {{0, 0}, {0, 1}, {1, 1}};
  k.pred_truth["P"] = {0};
  const AxiomDb& db = axiom_db();

  ModalVerdict v = kripke_validates(k, db.get("modal5").scheme);
  REQUIRE(!v.validated);
  CHECK(v.witness->world == 0);

  for (const std::string& label :
       {"mp", "minimp", "peirce", "contrap", "notelim", "gen", "ALLdistr", "spec", "ALLcomm",
        "EQrefl", "EQsymm", "EQtrans", "denot", "ALLeq", "genEq"})
    CHECK_MESSAGE(kripke_validates(k, db.get(label).scheme).validated, label);

  // vacGen and subst are genuinely falsified by this semantics
  CHECK(!kripke_validates(k, db.get("vacGen").scheme).validated);
  CHECK(!kripke_validates(k, db.get("subst").scheme).validated);

  // any reflexive model validates spec
  KripkeModel refl;
  refl.worlds = 3;
  refl.access = {{0, 0}, {1, 1}, {2, 2}, {0, 2}, {2, 1}};
  CHECK(kripke_validates(refl, db.get("spec").scheme).validated);
}

TEST_CASE("neighborhood model for ALLdistr") {
  NeighborhoodModel n;
  n.worlds = 3;
  n.neighborhoods = {{0b001, 0b011, 0b111}, {0b011, 0b110, 0b111}, {0b100, 0b101, 0b110, 0b111}};
  const AxiomDb& db = axiom_db();

  ModalVerdict v = neighborhood_validates(n, db.get("ALLdistr").scheme);
  REQUIRE(!v.validated);

  // the displayed witness: phi false exactly at w3, psi true exactly at w2;
  // the implication then fails at w2 (index 1)
  std::map<uint32_t, uint64_t> paper_witness{{0, 0b011}, {1, 0b010}};
  uint64_t truth = neighborhood_eval(n, db.get("ALLdistr").scheme.conclusion(), paper_witness);
  CHECK(((truth >> 1) & 1) == 0);

  for (const std::string& label :
       {"mp", "minimp", "peirce", "contrap", "notelim", "gen", "spec", "modal5", "ALLcomm",
        "EQrefl", "EQsymm", "EQtrans", "denot", "ALLeq", "genEq"})
    CHECK_MESSAGE(neighborhood_validates(n, db.get(label).scheme).validated, label);
}

TEST_CASE("modal validators agree with a brute-force subset evaluator") {
  // internal cross-check: a Kripke box is a neighborhood box over up-sets
  KripkeModel k;
  k.worlds = 2;
  k.access = {{0, 0}, {0, 1}, {1, 1}};
  NeighborhoodModel n;
  n.worlds = 2;
  // N(w) = supersets of R(w): R(0) = {0,1}, R(1) = {1}
  n.neighborhoods = {{0b11}, {0b10, 0b11}};
  const AxiomDb& db = axiom_db();
  for (const std::string& label : {"ALLdistr", "spec", "modal5", "modal4", "modalB", "modalD",
                                   "ALLcomm", "vacGen", "peirce"}) {
    const Scheme& s = db.get(label).scheme;
    CHECK_MESSAGE(kripke_validates(k, s).validated == neighborhood_validates(n, s).validated,
                  label);
  }
}

TEST_CASE("star truth separates P(v0) from its generalization") {
  Language lang{{"P", 1}};
  StarTruthModel s;
  s.base.domain_size = 2;
  s.base.language = lang;
  s.base.eq_graph = {{0, 0}, {1, 1}};
  s.base.predicate_tables["P"] = {{0}};
  s.base.default_quant_domain();
  s.anchor = 0;
  s.anchored_variable = 0;

  CHECK(star_true(s, parse_formula("P v0", lang)));
  CHECK(!star_true(s, parse_formula("A. v0 P v0", lang)));

  // mp preserves anchored truth over an enumerated pool
  std::vector<Formula> atoms = {parse_formula("P v0", lang), parse_formula("P v1", lang),
                                F("v0 = v1"), F("v0 = v0")};
  std::vector<Formula> pool = atoms;
  for (const Formula& f : atoms) {
    pool.push_back(Formula::negation(f));
    pool.push_back(Formula::forall(object_var(0), f));
    for (const Formula& g : atoms) pool.push_back(Formula::implies(f, g));
  }
  for (const Formula& f : pool)
    for (const Formula& g : pool) {
      if (star_true(s, f) && star_true(s, Formula::implies(f, g))) CHECK(star_true(s, g));
    }
}

TEST_CASE("truth table search at n=2 proves no table separates minimp") {
  const AxiomDb& db = axiom_db();
  std::vector<Scheme> validate = {db.get("mp").scheme, db.get("simp").scheme, db.get("id").scheme};
  TableSearchResult r = search_truth_table(2, validate, db.get("minimp").scheme, 100000000ull);
  CHECK(!r.table.has_value());
  CHECK(r.exhausted);
}

TEST_CASE("truth table search at n=1 finds nothing") {
  const AxiomDb& db = axiom_db();
  TableSearchResult r =
      search_truth_table(1, {db.get("mp").scheme}, db.get("minimp").scheme, 1000000ull);
  CHECK(!r.table.has_value());
  CHECK(r.exhausted);
}

TEST_CASE("the paper's 5-valued table is a witness for the search constraints") {
  TruthTableModel t = minimp_table();
  Language lang{{"P", 1}};
  const AxiomDb& db = axiom_db();
  for (const std::string& label : {"mp", "notnotintro", "simp", "id"})
    CHECK_MESSAGE(tt_validates(t, db.get(label).scheme, lang).validated, label);
  CHECK(!tt_validates(t, db.get("minimp").scheme, lang).validated);
}

TEST_CASE("classical two-valued table validates TMM minus denot") {
  // quantifier collapse turns the classical table into the denot
  // countermodel, so denot itself is the one necessary exception
  TruthTableModel t;
  t.value_count = 2;
  t.imp_table = {{1, 1}, {0, 1}};
  t.neg_table = {1, 0};
  t.designated = {1};
  t.eq_rule = {EqRule::Kind::IdentityIndexed, 1, 0};
  Language empty;
  for (const std::string& label : axiom_db().system("TMM")) {
    if (label == "denot") {
      CHECK(!tt_validates(t, axiom_db().get(label).scheme, empty).validated);
      continue;
    }
    CHECK_MESSAGE(tt_validates(t, axiom_db().get(label).scheme, empty).validated, label);
  }
}

TEST_CASE("min_instance_height is plain height") {
  CHECK(min_instance_height(F("x0 = x0")) == 1);
  CHECK(min_instance_height(F("A. x0 f0")) == 2);
  CHECK(min_instance_height(axiom_db().get("minimp").scheme.conclusion()) == 6);
}
