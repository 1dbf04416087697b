#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "schemata/axiomdb.hpp"
#include "schemata/proof.hpp"
#include "schemata/transforms.hpp"

using namespace schemata;

namespace {

Formula F(const std::string& s) { return parse_formula(s); }

// two-line fixture: A. x0 x0 = x0 from gen and EQrefl
ProofScript allrefl_proof() {
  ProofScript p;
  p.name = "allrefl";
  p.target = Scheme(F("A. x0 x0 = x0"));
  p.lines.push_back(ProofLine::by_axiom(F("x0 = x0"), "EQrefl", Substitution{}));
  Substitution gen_s;
  gen_s.set_fm(0, F("x0 = x0"));
  p.lines.push_back(ProofLine::by_axiom(F("A. x0 x0 = x0"), "gen", gen_s, {0}));
  return p;
}

AxiomSet gen_eqrefl() { return axiom_db().axiom_set({"gen", "EQrefl"}); }

}  // namespace

TEST_CASE("proof_dv adds every dummy pair") {
  ProofScript p = allrefl_proof();
  CHECK(proof_dv(p) == p.target.dv());  // no dummies

  // add a line mentioning dummies x5 and f1
  p.lines.insert(p.lines.begin(),
                 ProofLine::by_axiom(F("( A. x5 f1 -> f1 )"), "spec", Substitution{}));
  DvSet dv = proof_dv(p);
  CHECK(dv.contains(var_mv(5), var_mv(0)));
  CHECK(dv.contains(fm_mv(1), var_mv(0)));
  CHECK(dv.contains(var_mv(5), fm_mv(1)));  // dummies mutually disjoint
  // restriction to the target's metavariables gives the target's DV set
  CHECK(dv.restricted_to(p.target.occurring_mvs()) == p.target.dv());
}

TEST_CASE("the gen fixture verifies and tampering is rejected") {
  ProofScript p = allrefl_proof();
  CHECK(verify_proof(p, gen_eqrefl()).ok);

  SUBCASE("cited premise must come before the line") {
    ProofScript q = p;
    q.lines[1].premises = {1};
    VerifyReport r = verify_proof(q, gen_eqrefl());
    CHECK(!r.ok);
    CHECK(r.error == VerifyError::PremiseOutOfOrder);
  }
  SUBCASE("statement must equal the instance") {
    ProofScript q = p;
    q.lines[1].statement = F("A. x1 x0 = x0");
    VerifyReport r = verify_proof(q, gen_eqrefl());
    CHECK(!r.ok);
    CHECK(r.error == VerifyError::LineMismatch);
  }
  SUBCASE("unknown axiom labels are reported") {
    ProofScript q = p;
    q.lines[0].axiom_label = "EQrefll";
    CHECK(verify_proof(q, gen_eqrefl()).error == VerifyError::UnknownAxiom);
  }
  SUBCASE("conclusion must be the last line") {
    ProofScript q = p;
    q.target = Scheme(F("A. x1 x1 = x1"));
    CHECK(verify_proof(q, gen_eqrefl()).error == VerifyError::WrongConclusion);
  }
}

TEST_CASE("dv conditions of a cited axiom must be implied by DV(P)") {
  // denot instance needs DV(x0,x1); a target without it must be rejected
  ProofScript p;
  p.target = Scheme(F("( x0 = x0 -> -. A. x1 -. x1 = x0 )"));
  p.lines.push_back(
      ProofLine::by_axiom(F("( x0 = x0 -> -. A. x1 -. x1 = x0 )"), "denot", Substitution{}));
  VerifyReport r = verify_proof(p, axiom_db().axiom_set({"denot"}));
  CHECK(!r.ok);
  CHECK(r.error == VerifyError::DVViolation);

  DvSet dv;
  dv.insert(var_mv(0), var_mv(1));
  p.target = Scheme(F("( x0 = x0 -> -. A. x1 -. x1 = x0 )"), dv);
  CHECK(verify_proof(p, axiom_db().axiom_set({"denot"})).ok);
}

TEST_CASE("subst_proof renames dummies by the index shift rule") {
  // proof with dummy x5; sigma = {x0 <- x5} forces N = 5, so x5 becomes x11
  ProofScript p;
  p.target = Scheme(F("x0 = x0"));
  p.lines.push_back(ProofLine::by_axiom(F("( A. x5 x0 = x0 -> x0 = x0 )"), "spec", [] {
                      Substitution s;
                      s.set_var(0, meta_var(5));
                      s.set_fm(0, F("x0 = x0"));
                      return s;
                    }()));
  p.lines.push_back(ProofLine::by_axiom(F("x0 = x0"), "EQrefl", Substitution{}));

  AxiomSet axioms = axiom_db().axiom_set({"spec", "EQrefl"});
  REQUIRE(verify_proof(p, axioms).ok);

  Substitution sigma;
  sigma.set_var(0, meta_var(5));
  ProofScript q = subst_proof(sigma, p);
  CHECK(q.lines[0].statement == F("( A. x11 x5 = x5 -> x5 = x5 )"));
  CHECK(verify_proof(q, axioms).ok);
}

TEST_CASE("identity substitution leaves a dummy-free proof unchanged") {
  ProofScript p = allrefl_proof();
  ProofScript q = subst_proof(Substitution{}, p);
  CHECK(q.lines.size() == p.lines.size());
  for (size_t k = 0; k < q.lines.size(); ++k)
    CHECK(q.lines[k].statement == p.lines[k].statement);
}

TEST_CASE("substituted fixture verifies (the f0 <- x0 = x1 example)") {
  // target A. x2 f0 from hypothesis f0 by gen
  ProofScript p;
  p.target = Scheme({F("f0")}, F("A. x2 f0"));
  p.hyp_names = {"h1"};
  p.lines.push_back(ProofLine::hypothesis(F("f0"), "h1"));
  Substitution gen_s;
  gen_s.set_var(0, meta_var(2));
  p.lines.push_back(ProofLine::by_axiom(F("A. x2 f0"), "gen", gen_s, {0}));
  AxiomSet axioms = axiom_db().axiom_set({"gen"});
  REQUIRE(verify_proof(p, axioms).ok);

  Substitution sigma;
  sigma.set_fm(0, F("x0 = x1"));
  ProofScript q = subst_proof(sigma, p);
  CHECK(q.target.conclusion() == F("A. x2 x0 = x1"));
  CHECK(verify_proof(q, axioms).ok);
}

TEST_CASE("transform_proof handles the trivial cases") {
  ProofScript p = allrefl_proof();
  AxiomSet axioms = gen_eqrefl();

  // (i,i) is trivial
  ProofScript q = transform_proof(2, 2, p, axioms);
  CHECK(q.lines[1].statement == p.lines[1].statement);
  CHECK(verify_proof(q, axioms).ok);

  // x7 occurs nowhere
  q = transform_proof(0, 7, p, axioms);
  CHECK(q.lines[1].statement == p.lines[1].statement);
  CHECK(verify_proof(q, axioms).ok);

  // (0,1) on the fixture: no x1 anywhere, still the same scheme
  q = transform_proof(0, 1, p, axioms);
  CHECK(q.target.conclusion() == F("A. x0 x0 = x0"));
  CHECK(verify_proof(q, axioms).ok);
}

TEST_CASE("transform_proof rejects transforms blocked by DV(P)") {
  ProofScript p;
  DvSet dv;
  dv.insert(var_mv(0), var_mv(1));
  p.target = Scheme(F("( x0 = x0 -> -. A. x1 -. x1 = x0 )"), dv);
  p.lines.push_back(
      ProofLine::by_axiom(F("( x0 = x0 -> -. A. x1 -. x1 = x0 )"), "denot", Substitution{}));
  AxiomSet axioms = axiom_db().axiom_set({"denot"});
  REQUIRE(verify_proof(p, axioms).ok);
  CHECK_THROWS_AS(transform_proof(0, 1, p, axioms), IllegitimateTransform);
}

TEST_CASE("transform_proof rejects a capture that no axiom instance covers") {
  // gen applied under a (0,1)-transform that captures inside the body:
  // the transformed tuple is no longer a gen instance
  ProofScript p;
  p.target = Scheme(F("A. x0 x1 = x1"));
  p.lines.push_back(ProofLine::by_axiom(F("x1 = x1"), "EQrefl", [] {
                      Substitution s;
                      s.set_var(0, meta_var(1));
                      return s;
                    }()));
  Substitution gen_s;
  gen_s.set_fm(0, F("x1 = x1"));
  p.lines.push_back(ProofLine::by_axiom(F("A. x0 x1 = x1"), "gen", gen_s, {0}));
  AxiomSet axioms = gen_eqrefl();
  REQUIRE(verify_proof(p, axioms).ok);
  CHECK_THROWS_AS(transform_proof(0, 1, p, axioms), IllegitimateTransform);
}

namespace {

// randomized proofs over the supertruth-stable fragment
struct ProofGen {
  std::mt19937 rng{424242};
  AxiomSet axioms = axiom_db().axiom_set(
      {"mp", "minimp", "peirce", "contrap", "notelim", "gen", "ALLdistr", "modal5", "vacGen",
       "denot", "subst", "EQrefl", "EQsymm", "EQtrans"});

  Formula small_formula(uint32_t depth) {
    switch (rng() % (depth == 0 ? 2 : 4)) {
      case 0: return Formula::fm(rng() % 2);
      case 1: return Formula::equals(meta_var(rng() % 3), meta_var(rng() % 3));
      case 2: return Formula::negation(small_formula(depth - 1));
      default: return Formula::implies(small_formula(depth - 1), small_formula(depth - 1));
    }
  }

  // build a random proof by instantiating axioms and occasionally chaining
  // mp or gen on earlier lines
  ProofScript random_proof() {
    ProofScript p;
    std::vector<std::string> pool = {"peirce",  "contrap", "notelim", "ALLdistr",
                                     "modal5",  "EQrefl",  "EQsymm",  "EQtrans",
                                     "vacGen",  "subst",   "denot"};
    size_t n = 2 + rng() % 3;
    for (size_t k = 0; k < n; ++k) {
      const std::string& label = pool[rng() % pool.size()];
      const Scheme& ax = axioms.at(label);
      for (int attempt = 0; attempt < 40; ++attempt) {
        Substitution s;
        for (Metavariable m : ax.occurring_mvs()) {
          if (m.kind == MvKind::Variable) {
            if (rng() % 2) s.set_var(m.index, meta_var(rng() % 4));
          } else if (rng() % 2) {
            s.set_fm(m.index, small_formula(1 + rng() % 2));
          }
        }
        if (check_legitimate(s, ax)) continue;
        p.lines.push_back(ProofLine::by_axiom(apply_subst(s, ax.conclusion()), label, s));
        break;
      }
      // chain gen over the previous line now and then
      if (!p.lines.empty() && rng() % 3 == 0) {
        Substitution gs;
        uint32_t v = rng() % 3;
        gs.set_var(0, meta_var(v));
        gs.set_fm(0, p.lines.back().statement);
        p.lines.push_back(ProofLine::by_axiom(Formula::forall(meta_var(v), p.lines.back().statement),
                                              "gen", gs, {p.lines.size() - 1}));
      }
    }
    // the target needs exactly the DV conditions its lines' citations
    // propagate; pairs on dummies are covered by DV(P) automatically
    DvSet dv;
    for (const ProofLine& l : p.lines)
      if (l.kind == ProofLine::Kind::ByAxiom && axioms.count(l.axiom_label))
        dv.merge(propagate_dv(axioms.at(l.axiom_label).dv(), l.subst));
    p.target = Scheme(p.lines.back().statement, dv);
    return p;
  }
};

}  // namespace

TEST_CASE("substituted random proofs re-verify (proof-instance suite)") {
  ProofGen gen;
  std::mt19937& rng = gen.rng;
  int done = 0;
  while (done < 200) {
    ProofScript p = gen.random_proof();
    if (!verify_proof(p, gen.axioms).ok) continue;  // generator missed; skip
    Substitution sigma;
    if (rng() % 2) sigma.set_var(rng() % 3, meta_var(rng() % 6));
    if (rng() % 2) sigma.set_fm(rng() % 2, gen.small_formula(1 + rng() % 2));
    if (check_legitimate(sigma, p.target)) continue;
    ProofScript q = subst_proof(sigma, p);
    VerifyReport r = verify_proof(q, gen.axioms);
    REQUIRE_MESSAGE(r.ok, "substituted proof failed: " << r.detail);
    ++done;
  }
  CHECK(done == 200);
}

TEST_CASE("transformed random proofs re-verify when accepted (prov suite)") {
  ProofGen gen;
  std::mt19937& rng = gen.rng;
  int done = 0;
  int accepted = 0;
  while (done < 200) {
    ProofScript p = gen.random_proof();
    if (!verify_proof(p, gen.axioms).ok) continue;
    uint32_t i = rng() % 4, j = rng() % 4;
    ++done;
    try {
      ProofScript q = transform_proof(i, j, p, gen.axioms);
      VerifyReport r = verify_proof(q, gen.axioms);
      REQUIRE_MESSAGE(r.ok, "transformed proof failed: " << r.detail);
      ++accepted;
    } catch (const IllegitimateTransform&) {
      // the transform does not act on proofs of this shape; that is a
      // legitimate outcome, not a failure
    }
  }
  CHECK(done == 200);
  CHECK(accepted > 100);  // most draws are rejustifiable
}
