#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "schemata/axiomdb.hpp"
#include "schemata/objectlevel.hpp"

using namespace schemata;

namespace {

Formula F(const std::string& s) { return parse_formula(s); }
Formula FP(const std::string& s) {
  Language lang{{"P", 1}};
  return parse_formula(s, lang);
}

// naive substitute-then-check evaluator, kept independent of fo_eval
bool naive_valid(uint32_t n, const Formula& f) {
  std::function<bool(const Formula&, std::map<uint32_t, uint32_t>&)> ev =
      [&](const Formula& g, std::map<uint32_t, uint32_t>& env) -> bool {
    switch (g.kind()) {
      case Formula::Kind::Equals:
        return env.at(g.eq_lhs().index) == env.at(g.eq_rhs().index);
      case Formula::Kind::Not: return !ev(g.child(), env);
      case Formula::Kind::Implies: return !ev(g.lhs(), env) || ev(g.rhs(), env);
      case Formula::Kind::Forall: {
        for (uint32_t d = 0; d < n; ++d) {
          auto saved = env;
          env[g.bound().index] = d;
          bool r = ev(g.child(), env);
          env = saved;
          if (!r) return false;
        }
        return true;
      }
      default: throw std::runtime_error("naive_valid: unsupported node");
    }
  };
  std::set<uint32_t> fv_set = free_object_vars(f);
  std::vector<uint32_t> fv(fv_set.begin(), fv_set.end());
  std::function<bool(size_t, std::map<uint32_t, uint32_t>&)> all =
      [&](size_t k, std::map<uint32_t, uint32_t>& env) -> bool {
    if (k == fv.size()) return ev(f, env);
    for (uint32_t d = 0; d < n; ++d) {
      env[fv[k]] = d;
      if (!all(k + 1, env)) return false;
    }
    return true;
  };
  std::map<uint32_t, uint32_t> env;
  return all(0, env);
}

}  // namespace

TEST_CASE("object instantiation follows the displayed example") {
  Scheme s(F("A. x0 f0"));
  Substitution tau;
  tau.set_var(0, object_var(1));
  tau.set_fm(0, F("v0 = v2"));
  FormulaWithHypotheses out = object_instantiate(tau, s);
  CHECK(out.conclusion == F("A. v1 v0 = v2"));
}

TEST_CASE("object instantiation rejects DV violations and partial maps") {
  const Scheme& vacgen = axiom_db().get("vacGen").scheme;
  Substitution tau;
  tau.set_var(0, object_var(0));
  tau.set_fm(0, F("v0 = v1"));
  CHECK_THROWS_AS(object_instantiate(tau, vacgen), IllegitimateSubstitution);

  Substitution partial;
  partial.set_var(0, object_var(0));
  CHECK_THROWS_AS(object_instantiate(partial, vacgen), MissingMapping);
}

TEST_CASE("object instantiation of spec with a predicate") {
  Language lang{{"P", 1}};
  const Scheme& spec = axiom_db().get("spec").scheme;
  Substitution tau;
  tau.set_var(0, object_var(0));
  tau.set_fm(0, parse_formula("P v0", lang));
  CHECK(object_instantiate(tau, spec).conclusion == parse_formula("( A. v0 P v0 -> P v0 )", lang));
}

TEST_CASE("the object-like embedding adds all DV pairs") {
  FormulaWithHypotheses f;
  f.conclusion = F("v0 = v1");
  Scheme s = embed_object_like(f);
  CHECK(s.conclusion() == F("x0 = x1"));
  CHECK(s.dv().contains(var_mv(0), var_mv(1)));

  f.conclusion = F("A. v0 v0 = v0");
  s = embed_object_like(f);
  CHECK(s.conclusion() == F("A. x0 x0 = x0"));
  CHECK(s.dv().empty());

  f.conclusion = F("( A. v0 A. v1 v2 = v3 -> A. v1 A. v0 v2 = v3 )");
  s = embed_object_like(f);
  CHECK(s.dv().size() == 6);
}

TEST_CASE("embedding object instances yields instances of the scheme") {
  std::mt19937 rng(777);
  const AxiomDb& db = axiom_db();
  std::vector<std::string> labels = {"spec", "ALLdistr", "ALLcomm", "EQtrans", "modal5", "genEq"};
  for (int round = 0; round < 100; ++round) {
    const Scheme& ax = db.get(labels[rng() % labels.size()]).scheme;
    Substitution tau;
    for (Metavariable m : ax.occurring_mvs()) {
      if (m.kind == MvKind::Variable)
        tau.set_var(m.index, object_var(rng() % 4));
      else
        tau.set_fm(m.index, rng() % 2 ? F("v0 = v1") : F("A. v2 v2 = v0"));
    }
    if (check_legitimate(tau, ax)) continue;
    Scheme embedded = embed_object_like(object_instantiate(tau, ax));
    CHECK(is_instance(embedded, ax).has_value());
  }
}

TEST_CASE("fo_eval follows the modified quantifier semantics") {
  Language lang{{"P", 1}};
  FirstOrderModel m;
  m.domain_size = 2;
  m.language = lang;
  for (uint32_t a = 0; a < 2; ++a)
    for (uint32_t b = 0; b < 2; ++b) m.eq_graph.insert({a, b});  // total
  m.predicate_tables["P"] = {{0}};
  m.quant_domain = {0};

  Formula inst = parse_formula("( A. v0 P v0 -> P v0 )", lang);
  CHECK(fo_eval(m, inst, {{0, 1}}) == false);  // consequent at v0 = 1
  CHECK(fo_eval(m, inst, {{0, 0}}) == true);

  FirstOrderModel empty_eq;
  empty_eq.domain_size = 1;
  empty_eq.default_quant_domain();
  CHECK(fo_eval(empty_eq, F("v0 = v0"), {{0, 0}}) == false);
  CHECK(fo_eval(empty_eq, F("( v0 = v0 -> v0 = v0 )"), {{0, 0}}) == true);

  CHECK_THROWS_AS(fo_eval(empty_eq, F("v1 = v1"), {{0, 0}}), UnassignedVariable);
}

TEST_CASE("fo model validation on standard semantics matches hand values") {
  FirstOrderModel m = FirstOrderModel::standard(3);
  struct Row {
    const char* text;
    bool valid;
  };
  const Row rows[] = {
      {"A. v0 v0 = v0", true},
      {"( A. v0 v0 = v1 -> v1 = v1 )", true},
      {"-. A. v0 v0 = v1", true},   // 3 elements, some v0 differs
      {"A. v0 -. v0 = v1", false},
      {"( v0 = v1 -> v1 = v0 )", true},
      {"( v0 = v1 -> v0 = v2 )", false},
      {"( A. v0 A. v1 v2 = v3 -> A. v1 A. v0 v2 = v3 )", true},
      // the transformed ALLcomm shape: valid with distinct free variables,
      // refuted only under the v1-for-v2 identification
      {"( A. v0 A. v0 v2 = v3 -> A. v1 A. v0 v2 = v3 )", true},
      {"( A. v0 A. v0 v1 = v3 -> A. v1 A. v0 v1 = v3 )", false},
      {"-. A. v0 -. v0 = v1", true},
      {"( v0 = v0 -> -. A. v1 -. v1 = v0 )", true},
      {"A. v0 ( v0 = v1 -> v1 = v0 )", true},
      {"( -. v0 = v0 -> v1 = v2 )", true},
      {"( A. v0 v0 = v0 -> v1 = v2 )", false},
      {"-. -. v0 = v0", true},
      {"( v0 = v1 -> ( v1 = v2 -> v0 = v2 ) )", true},
      {"A. v0 A. v1 A. v2 ( v0 = v1 -> ( v1 = v2 -> v0 = v2 ) )", true},
      {"( A. v0 v0 = v1 -> v0 = v1 )", true},
      {"-. A. v1 A. v0 v0 = v1", true},
      {"( v0 = v1 -> A. v2 v0 = v1 )", true},
      {"( v0 = v1 -> A. v0 v0 = v1 )", false},
  };
  for (const Row& r : rows) {
    Formula f = F(r.text);
    std::set<uint32_t> fv_set = free_object_vars(f);
    std::vector<uint32_t> fv(fv_set.begin(), fv_set.end());
    bool valid = true;
    std::function<bool(size_t, Assignment&)> rec = [&](size_t k, Assignment& asg) -> bool {
      if (k == fv.size()) return fo_eval(m, f, asg);
      for (uint32_t d = 0; d < m.domain_size; ++d) {
        asg[fv[k]] = d;
        if (!rec(k + 1, asg)) return false;
      }
      return true;
    };
    Assignment asg;
    valid = rec(0, asg);
    CHECK_MESSAGE(valid == r.valid, std::string(r.text));
    CHECK_MESSAGE(naive_valid(3, f) == r.valid, std::string(r.text));  // oracle agreement
  }
}

TEST_CASE("decide_eq_truth on the axioms and displayed examples") {
  const AxiomDb& db = axiom_db();
  CHECK(decide_eq_truth(Scheme(F("A. x0 x0 = x0"))));
  CHECK(decide_eq_truth(db.get("EQrefl").scheme));
  CHECK(decide_eq_truth(db.get("EQsymm").scheme));
  CHECK(decide_eq_truth(db.get("EQtrans").scheme));
  CHECK(decide_eq_truth(db.get("denot").scheme));
  CHECK(decide_eq_truth(db.get("genEq").scheme));

  // the remark example: with DV the scheme holds only from size 2 on
  DvSet dv;
  dv.insert(var_mv(0), var_mv(1));
  EqTruthDetail d = decide_eq_truth_detail(Scheme(F("-. A. x0 x0 = x1"), dv));
  CHECK(!d.truth);
  REQUIRE(d.valid_at_size.size() >= 4);
  CHECK(!d.valid_at_size[0]);
  CHECK(d.valid_at_size[1]);
  CHECK(d.valid_at_size[2]);
  CHECK(d.valid_at_size[3]);

  // without DV it is false outright (identify x0 and x1)
  CHECK(!decide_eq_truth(Scheme(F("-. A. x0 x0 = x1"))));

  // ALLcomm instance true; its (0,1)-transform false
  CHECK(decide_eq_truth(Scheme(F("( A. x0 A. x1 x2 = x3 -> A. x1 A. x0 x2 = x3 )"))));
  CHECK(!decide_eq_truth(Scheme(F("( A. x0 A. x0 x2 = x3 -> A. x1 A. x0 x2 = x3 )"))));

  CHECK_THROWS_AS(decide_eq_truth(Scheme(F("f0"))), UnsupportedScheme);
  CHECK_THROWS_AS(decide_eq_truth(Scheme(FP("P x0"))), UnsupportedScheme);
}

TEST_CASE("decide_eq_truth is invariant under injective renaming") {
  Scheme a(F("( A. x0 x0 = x1 -> x0 = x1 )"));
  Scheme b(F("( A. x4 x4 = x7 -> x4 = x7 )"));
  CHECK(decide_eq_truth(a) == decide_eq_truth(b));

  DvSet dva, dvb;
  dva.insert(var_mv(0), var_mv(1));
  dvb.insert(var_mv(4), var_mv(7));
  CHECK(decide_eq_truth(Scheme(F("-. A. x0 -. x0 = x1"), dva)) ==
        decide_eq_truth(Scheme(F("-. A. x4 -. x4 = x7"), dvb)));
}

TEST_CASE("identification patterns respect DV conditions") {
  DvSet dv;
  dv.insert(var_mv(0), var_mv(1));
  auto pats = identification_patterns({0, 1}, dv);
  CHECK(pats.size() == 1);  // only the all-distinct pattern
  auto all = identification_patterns({0, 1}, DvSet{});
  CHECK(all.size() == 2);  // identified or distinct
  auto three = identification_patterns({0, 1, 2}, DvSet{});
  CHECK(three.size() == 5);  // Bell number B3
}

TEST_CASE("fo_validates_scheme falsifies spec in the restricted model") {
  Language lang{{"P", 1}};
  FirstOrderModel m;
  m.domain_size = 2;
  m.language = lang;
  for (uint32_t a = 0; a < 2; ++a)
    for (uint32_t b = 0; b < 2; ++b) m.eq_graph.insert({a, b});
  m.predicate_tables["P"] = {{0}};
  m.quant_domain = {0};

  FoVerdict spec = fo_validates_scheme(m, axiom_db().get("spec").scheme, 1);
  REQUIRE(!spec.validated);
  REQUIRE(spec.witness.has_value());
  CHECK(fo_eval(m, spec.witness->instance.conclusion, spec.witness->assignment) == false);

  FoVerdict vacgen = fo_validates_scheme(m, axiom_db().get("vacGen").scheme, 1);
  CHECK(vacgen.validated);
  FoVerdict subst = fo_validates_scheme(m, axiom_db().get("subst").scheme, 1);
  CHECK(subst.validated);
}

TEST_CASE("fo_validates_scheme falsifies subst in the Monk model") {
  Language lang{{"P", 1}};
  FirstOrderModel m;
  m.domain_size = 3;
  m.language = lang;
  for (uint32_t a : {0u, 1u})
    for (uint32_t b : {0u, 1u}) m.eq_graph.insert({a, b});
  m.eq_graph.insert({2, 2});
  m.predicate_tables["P"] = {{0}};
  m.default_quant_domain();

  FoVerdict subst = fo_validates_scheme(m, axiom_db().get("subst").scheme, 0);
  REQUIRE(!subst.validated);
  REQUIRE(subst.witness.has_value());
  CHECK(fo_eval(m, subst.witness->instance.conclusion, subst.witness->assignment) == false);

  CHECK(fo_validates_scheme(m, axiom_db().get("ALLeq").scheme, 0).validated);
  CHECK(fo_validates_scheme(m, axiom_db().get("genEq").scheme, 0).validated);
  CHECK(fo_validates_scheme(m, axiom_db().get("oneObj").scheme, 0).validated);
}
