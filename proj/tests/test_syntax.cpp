#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "schemata/syntax.hpp"

using namespace schemata;

TEST_CASE("parse round trips the grammar") {
  Formula f = parse_formula("( A. x0 f0 -> f0 )");
  CHECK(f.kind() == Formula::Kind::Implies);
  CHECK(f.lhs().kind() == Formula::Kind::Forall);
  CHECK(f.lhs().bound() == meta_var(0));
  CHECK(f.lhs().child() == Formula::fm(0));
  CHECK(f.rhs() == Formula::fm(0));
  CHECK(render(f) == "( A. x0 f0 -> f0 )");
}

TEST_CASE("prefix negation and quantifier binding") {
  Formula f = parse_formula("-. A. x1 -. x1 = x0");
  CHECK(f.kind() == Formula::Kind::Not);
  const Formula& q = f.child();
  CHECK(q.kind() == Formula::Kind::Forall);
  CHECK(q.bound() == meta_var(1));
  CHECK(q.child().kind() == Formula::Kind::Not);
  CHECK(q.child().child() == Formula::equals(meta_var(1), meta_var(0)));
}

TEST_CASE("predicates check arity against the language") {
  Language lang{{"P", 1}};
  Formula f = parse_formula("P x0", lang);
  CHECK(f.kind() == Formula::Kind::Pred);
  CHECK(f.pred_args().size() == 1);
  CHECK_THROWS_AS(parse_formula("P x0 x1", lang), ParseError);
  CHECK_THROWS_AS(parse_formula("Q x0", lang), ParseError);
}

TEST_CASE("object variables parse as a separate kind") {
  Formula f = parse_formula("A. v0 v0 = v1");
  CHECK(f.bound() == object_var(0));
  CHECK(is_object_formula(f));
  CHECK(!is_meta_formula(f));
  CHECK_THROWS_AS(parse_formula("x0 = v1"), ParseError);
}

TEST_CASE("height follows the leaf-1 convention") {
  CHECK(height(parse_formula("f0")) == 1);
  CHECK(height(parse_formula("A. x0 f0")) == 2);
  CHECK(height(parse_formula("( f0 -> -. f1 )")) == 3);
  CHECK(height(parse_formula("x0 = x1")) == 1);
}

TEST_CASE("occurring collects both kinds of metavariable") {
  MvSet occ = occurring(parse_formula("A. x0 f0"));
  CHECK(occ == MvSet{var_mv(0), fm_mv(0)});

  occ = occurring(parse_formula("( x0 = x1 -> ( x1 = x2 -> x0 = x2 ) )"));
  CHECK(occ == MvSet{var_mv(0), var_mv(1), var_mv(2)});

  // object variables are not metavariables
  CHECK(occurring(parse_formula("v0 = v1")).empty());
}

TEST_CASE("occurring is monotone under subtree inclusion") {
  Formula f = parse_formula("( A. x0 ( x1 = x2 -> f0 ) -> -. f1 )");
  MvSet parent = occurring(f);
  MvSet left = occurring(f.lhs());
  MvSet right = occurring(f.rhs());
  for (Metavariable m : left) CHECK(parent.count(m) == 1);
  for (Metavariable m : right) CHECK(parent.count(m) == 1);
}

namespace {

// structural enumerator for the round-trip property
void enumerate(uint32_t max_height, std::vector<Formula>& out) {
  std::vector<std::vector<Formula>> by_height(max_height + 1);
  by_height[1] = {Formula::fm(0), Formula::fm(1), Formula::equals(meta_var(0), meta_var(1)),
                  Formula::equals(meta_var(1), meta_var(1))};
  for (uint32_t h = 2; h <= max_height; ++h) {
    for (const Formula& f : by_height[h - 1]) {
      by_height[h].push_back(Formula::negation(f));
      by_height[h].push_back(Formula::forall(meta_var(0), f));
      if (by_height[h].size() > 40) break;
    }
    for (const Formula& f : by_height[h - 1])
      for (const Formula& g : by_height[h - 1]) {
        by_height[h].push_back(Formula::implies(f, g));
        if (by_height[h].size() > 80) break;
      }
  }
  for (auto& level : by_height)
    for (auto& f : level) out.push_back(f);
}

}  // namespace

TEST_CASE("render and parse are inverse on enumerated formulas") {
  std::vector<Formula> pool;
  enumerate(5, pool);
  CHECK(pool.size() > 100);
  for (const Formula& f : pool) {
    Formula back = parse_formula(render(f));
    CHECK(back == f);
  }
}

TEST_CASE("quantifier depth and variable queries") {
  Formula f = parse_formula("( A. v0 A. v1 v0 = v1 -> v2 = v2 )");
  CHECK(quantifier_depth(f) == 2);
  CHECK(object_vars(f) == std::set<uint32_t>{0, 1, 2});
  CHECK(free_object_vars(f) == std::set<uint32_t>{2});
  CHECK(free_object_vars(parse_formula("A. v0 v0 = v1")) == std::set<uint32_t>{1});
}

TEST_CASE("parse errors carry token positions") {
  try {
    parse_formula("( f0 -> )");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position == 3);
  }
}
