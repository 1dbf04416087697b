#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "schemata/certs.hpp"
#include "schemata/script.hpp"

using namespace schemata;

TEST_CASE("scheme and proof blocks parse and verify") {
  const char* text = R"(
scheme allrefl { concl: A. x0 x0 = x0 }
proof p of allrefl from gen , EQrefl {
  1: x0 = x0 by EQrefl
  2: A. x0 x0 = x0 by gen ( f0 := x0 = x0 ) from 1
}
)";
  ScriptFile sf = parse_script(text);
  REQUIRE(sf.schemes.size() == 1);
  REQUIRE(sf.proofs.size() == 1);
  AxiomSet set = sf.resolve_sources(sf.proofs[0].axiom_sources);
  CHECK(set.size() == 2);
  CHECK(verify_proof(sf.proofs[0].proof, set).ok);
}

TEST_CASE("hypothesis lines resolve by name") {
  const char* text = R"(
scheme lifted { hyp h1: f0 ; concl: A. x2 f0 }
proof p of lifted from gen {
  1: f0 hyp h1
  2: A. x2 f0 by gen ( x0 := x2 ) from 1
}
)";
  ScriptFile sf = parse_script(text);
  AxiomSet set = sf.resolve_sources(sf.proofs[0].axiom_sources);
  CHECK(verify_proof(sf.proofs[0].proof, set).ok);
}

TEST_CASE("dv lines declare all pairs among the listed metavariables") {
  const char* text = "scheme s { dv: x0 x1 f0 ; concl: ( A. x0 x0 = x1 -> f0 ) }";
  ScriptFile sf = parse_script(text);
  const Scheme& s = sf.schemes[0].second;
  CHECK(s.dv().size() == 3);
  CHECK(s.dv().contains(var_mv(0), var_mv(1)));
  CHECK(s.dv().contains(var_mv(0), fm_mv(0)));
  CHECK(s.dv().contains(var_mv(1), fm_mv(0)));
}

TEST_CASE("forward references are rejected") {
  const char* text = R"(
proof p of later from gen { 1: x0 = x0 by EQrefl }
scheme later { concl: x0 = x0 }
)";
  CHECK_THROWS_AS(parse_script(text), ScriptError);
}

TEST_CASE("systems expand in from-clauses") {
  const char* text = R"(
scheme allrefl { concl: A. x0 x0 = x0 }
proof p of allrefl from T {
  1: x0 = x0 by EQrefl
  2: A. x0 x0 = x0 by gen ( f0 := x0 = x0 ) from 1
}
)";
  ScriptFile sf = parse_script(text);
  AxiomSet set = sf.resolve_sources(sf.proofs[0].axiom_sources);
  CHECK(set.size() == 12);  // propcalc + EQ + gen + ALLdistr + vacGen + denot
  CHECK(verify_proof(sf.proofs[0].proof, set).ok);
}

TEST_CASE("language blocks feed predicate parsing and models") {
  const char* text = R"(
language { P 1 ; in 2 }
cert c {
  validate: EQrefl ;
  falsify: { concl: -. x0 = x0 } ;
  model fo { size 2 ; eq identity } ;
  support 1 ;
}
)";
  ScriptFile sf = parse_script(text);
  REQUIRE(sf.certs.size() == 1);
  AxiomSet axioms = sf.resolve_axioms();
  CHECK(axioms.count("ax-P1") == 1);
  CHECK(axioms.count("ax-in1") == 1);
  CHECK(axioms.count("gen-P") == 1);
  CertReport r = check_certificate(sf.certs[0], axioms);
  CHECK(r.ok);
}

TEST_CASE("parse errors carry line numbers") {
  try {
    parse_script("scheme s {\n concl: ( f0 -> )\n}");
    FAIL("expected ScriptError");
  } catch (const ScriptError& e) {
    CHECK(e.line == 2);
  }
}

TEST_CASE("bundled fixtures parse") {
  for (const BundledScript& bs : bundled_scripts()) {
    CAPTURE(bs.name);
    CHECK_NOTHROW(parse_script(bs.text));
  }
}
