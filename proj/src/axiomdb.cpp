#include "schemata/axiomdb.hpp"

#include <algorithm>

namespace schemata {

namespace {

Formula F(const std::string& text) { return parse_formula(text); }

DvSet dv(std::initializer_list<std::pair<Metavariable, Metavariable>> ps) {
  DvSet d;
  for (auto [a, b] : ps) d.insert(a, b);
  return d;
}

}  // namespace

void AxiomDb::add(std::string label, std::optional<std::string> mm, AxiomBloc bloc, Scheme s) {
  if (index_.count(label)) throw std::logic_error("duplicate axiom label " + label);
  index_[label] = entries_.size();
  entries_.push_back(AxiomEntry{std::move(label), std::move(mm), std::move(s), bloc});
}

AxiomDb::AxiomDb() {
  using B = AxiomBloc;

  // propositional calculus
  add("mp", "ax-mp", B::Propcalc, Scheme({F("f0"), F("( f0 -> f1 )")}, F("f1")));
  add("minimp", "minimp", B::Propcalc,
      Scheme(F("( f0 -> ( ( f1 -> f2 ) -> ( ( ( f3 -> f1 ) -> ( f2 -> f4 ) ) -> ( f1 -> f4 ) ) ) )")));
  add("peirce", "peirce", B::Propcalc, Scheme(F("( ( ( f0 -> f1 ) -> f0 ) -> f0 )")));
  add("contrap", "con2", B::Propcalc, Scheme(F("( ( f0 -> -. f1 ) -> ( f1 -> -. f0 ) )")));
  add("notelim", "pm2.21", B::Propcalc, Scheme(F("( -. f0 -> ( f0 -> f1 ) )")));

  // modal bloc
  add("gen", "ax-gen", B::Modal, Scheme({F("f0")}, F("A. x0 f0")));
  add("ALLdistr", "ax-4", B::Modal,
      Scheme(F("( A. x0 ( f0 -> f1 ) -> ( A. x0 f0 -> A. x0 f1 ) )")));
  add("spec", "sp", B::Modal, Scheme(F("( A. x0 f0 -> f0 )")));
  add("modal5", "ax-10", B::Modal, Scheme(F("( -. A. x0 f0 -> A. x0 -. A. x0 f0 )")));

  add("vacGen", "ax-5", B::VacGen,
      Scheme(F("( f0 -> A. x0 f0 )"), dv({{var_mv(0), fm_mv(0)}})));
  add("ALLcomm", "ax-11", B::Modal,
      Scheme(F("( A. x0 A. x1 f0 -> A. x1 A. x0 f0 )")));

  // equality bloc
  add("EQrefl", "equid", B::Equality, Scheme(F("x0 = x0")));
  add("EQsymm", "equcomi", B::Equality, Scheme(F("( x0 = x1 -> x1 = x0 )")));
  add("EQtrans", "equtr", B::Equality,
      Scheme(F("( x0 = x1 -> ( x1 = x2 -> x0 = x2 ) )")));

  add("denot", "bj-denot", B::Denot,
      Scheme(F("( x0 = x0 -> -. A. x1 -. x1 = x0 )"), dv({{var_mv(0), var_mv(1)}})));
  add("subst", "bj-ax12", B::Subst,
      Scheme(F("A. x0 ( x0 = x1 -> ( f0 -> A. x0 ( x0 = x1 -> f0 ) ) )"),
             dv({{var_mv(0), var_mv(1)}, {var_mv(1), fm_mv(0)}})));
  add("ALLeq", "ax-c11", B::AllEq,
      Scheme(F("( A. x0 x0 = x1 -> ( A. x0 f0 -> A. x1 f0 ) )")));
  add("genEq", "ax-c9", B::GenEq,
      Scheme(F("( -. A. x0 x0 = x1 -> ( -. A. x0 x0 = x2 -> ( x1 = x2 -> A. x0 x1 = x2 ) ) )")));

  // modal variants
  add("modalD", "bj-modald", B::Variant, Scheme(F("( A. x0 -. f0 -> -. A. x0 f0 )")));
  add("modalB", "bj-modalb", B::Variant, Scheme(F("( -. f0 -> A. x0 -. A. x0 f0 )")));
  add("modal4", "hba1", B::Variant, Scheme(F("( A. x0 f0 -> A. x0 A. x0 f0 )")));

  // propositional variants (combinator-style labels)
  add("syl", "imim1", B::Variant,
      Scheme(F("( ( f0 -> f1 ) -> ( ( f1 -> f2 ) -> ( f0 -> f2 ) ) )")));
  add("B", "imim2", B::Variant,
      Scheme(F("( ( f0 -> f1 ) -> ( ( f2 -> f0 ) -> ( f2 -> f1 ) ) )")));
  add("comm", "pm2.04", B::Variant,
      Scheme(F("( ( f0 -> ( f1 -> f2 ) ) -> ( f1 -> ( f0 -> f2 ) ) )")));
  add("simp", "ax-1", B::Variant, Scheme(F("( f0 -> ( f1 -> f0 ) )")));
  add("id", "id", B::Variant, Scheme(F("( f0 -> f0 )")));
  add("hilbert", "pm2.43", B::Variant,
      Scheme(F("( ( f0 -> ( f0 -> f1 ) ) -> ( f0 -> f1 ) )")));
  add("frege", "ax-2", B::Variant,
      Scheme(F("( ( f0 -> ( f1 -> f2 ) ) -> ( ( f0 -> f1 ) -> ( f0 -> f2 ) ) )")));
  add("ax-3", "ax-3", B::Variant,
      Scheme(F("( ( -. f0 -> -. f1 ) -> ( f1 -> f0 ) )")));
  add("excontra", "pm2.24", B::Variant, Scheme(F("( f0 -> ( -. f0 -> f1 ) )")));
  add("clavius", "pm2.18", B::Variant, Scheme(F("( ( -. f0 -> f0 ) -> f0 )")));
  add("notnotintro", "notnot", B::Variant, Scheme(F("( f0 -> -. -. f0 )")));
  add("notnotelim", "notnotr", B::Variant, Scheme(F("( -. -. f0 -> f0 )")));

  // equality and quantifier variants
  add("EQeucl", "ax-7", B::Variant,
      Scheme(F("( x0 = x1 -> ( x0 = x2 -> x1 = x2 ) )")));
  add("ax-eq2", "equeucl", B::Variant,
      Scheme(F("( x0 = x1 -> ( x2 = x0 -> x2 = x1 ) )")));
  add("ax-6", "ax-6", B::Variant, Scheme(F("-. A. x0 -. x0 = x1")));
  add("denotp", "ax6v", B::Variant,
      Scheme(F("-. A. x0 -. x0 = x1"), dv({{var_mv(0), var_mv(1)}})));
  add("ax-12", "ax-12", B::Variant,
      Scheme(F("( x0 = x1 -> ( A. x1 f0 -> A. x0 ( x0 = x1 -> f0 ) ) )")));
  add("ax12v", "ax12v", B::Variant,
      Scheme(F("( x0 = x1 -> ( f0 -> A. x0 ( x0 = x1 -> f0 ) ) )"),
             dv({{var_mv(0), var_mv(1)}})));
  add("ax12v2", "ax12v2", B::Variant,
      Scheme(F("( x0 = x1 -> ( f0 -> A. x0 ( x0 = x1 -> f0 ) ) )"),
             dv({{var_mv(0), var_mv(1)}, {var_mv(1), fm_mv(0)}})));
  add("ax-c11n", "ax-c11n", B::Variant,
      Scheme(F("( A. x0 x0 = x1 -> A. x1 x1 = x0 )")));
  add("oneObj", "ax-c16", B::Variant,
      Scheme(F("( A. x0 x0 = x1 -> ( f0 -> A. x0 f0 ) )"), dv({{var_mv(0), var_mv(1)}})));
  add("ax-13", "ax-13", B::Variant,
      Scheme(F("( -. x0 = x1 -> ( x1 = x2 -> A. x0 x1 = x2 ) )")));
  add("ax5ea", "ax5ea", B::Variant,
      Scheme(F("( -. A. x0 -. f0 -> A. x0 f0 )"), dv({{var_mv(0), fm_mv(0)}})));

  // the membership example of the predicate axiom schemes
  add("ax-in1", "ax-8", B::Predicate, predicate_axiom("in", 2, 1));
  add("ax-in2", "ax-9", B::Predicate, predicate_axiom("in", 2, 2));

  auto join = [](std::initializer_list<std::vector<std::string>> parts,
                 std::initializer_list<std::string> extra) {
    std::vector<std::string> out;
    for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
    out.insert(out.end(), extra.begin(), extra.end());
    return out;
  };

  std::vector<std::string> minimplcalc = {"mp", "minimp"};
  std::vector<std::string> mincalc = join({minimplcalc}, {"contrap"});
  std::vector<std::string> implcalc = join({minimplcalc}, {"peirce"});
  std::vector<std::string> intuitcalc = join({mincalc}, {"notelim"});
  std::vector<std::string> paraccalc = join({mincalc}, {"peirce"});
  std::vector<std::string> propcalc = join({intuitcalc}, {"peirce"});
  std::vector<std::string> eq = {"EQrefl", "EQsymm", "EQtrans"};
  std::vector<std::string> modK = join({propcalc}, {"gen", "ALLdistr"});
  std::vector<std::string> modT = join({modK}, {"spec"});
  std::vector<std::string> modS5 = join({modT}, {"modal5"});
  std::vector<std::string> pure = join({modS5}, {"ALLcomm"});
  std::vector<std::string> monadic = join({modS5}, {"vacGen"});
  std::vector<std::string> t = join({modK, eq}, {"vacGen", "denot"});
  std::vector<std::string> pure_eq = join({pure, eq}, {});
  std::vector<std::string> pure2 = join({pure}, {"vacGen"});
  std::vector<std::string> pure_eq2 = join({pure2, eq}, {});
  std::vector<std::string> t2 = join({pure_eq2}, {"denot"});
  std::vector<std::string> tm = join({t2}, {"subst"});
  std::vector<std::string> tmm = join({tm}, {"ALLeq", "genEq"});

  systems_["minimplcalc"] = minimplcalc;
  systems_["mincalc"] = mincalc;
  systems_["implcalc"] = implcalc;
  systems_["intuitcalc"] = intuitcalc;
  systems_["paraccalc"] = paraccalc;
  systems_["propcalc"] = propcalc;
  systems_["EQ"] = eq;
  systems_["modK"] = modK;
  systems_["modT"] = modT;
  systems_["modS5"] = modS5;
  systems_["pure"] = pure;
  systems_["monadic"] = monadic;
  systems_["T"] = t;
  systems_["pure-eq"] = pure_eq;
  systems_["pure'"] = pure2;
  systems_["pure-eq'"] = pure_eq2;
  systems_["T'"] = t2;
  systems_["TM"] = tm;
  systems_["TMM"] = tmm;
}

const AxiomEntry& AxiomDb::get(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) throw UnknownLabel(label);
  return entries_[it->second];
}

bool AxiomDb::has(const std::string& label) const { return index_.count(label) > 0; }

std::vector<std::string> AxiomDb::system(const std::string& name) const {
  auto it = systems_.find(name);
  if (it == systems_.end()) throw UnknownSystem(name);
  return it->second;
}

bool AxiomDb::has_system(const std::string& name) const { return systems_.count(name) > 0; }

std::vector<std::string> AxiomDb::system_names() const {
  std::vector<std::string> names;
  for (const auto& [n, _] : systems_) names.push_back(n);
  return names;
}

AxiomSet AxiomDb::axiom_set(const std::vector<std::string>& labels) const {
  AxiomSet out;
  for (const std::string& l : labels) out.emplace(l, get(l).scheme);
  return out;
}

AxiomSet AxiomDb::system_set(const std::string& name) const { return axiom_set(system(name)); }

std::vector<std::pair<std::string, std::string>> AxiomDb::label_map() const {
  std::vector<std::pair<std::string, std::string>> out;
  for (const AxiomEntry& e : entries_)
    if (e.set_mm_label) out.emplace_back(e.label, *e.set_mm_label);
  return out;
}

const AxiomDb& axiom_db() {
  static const AxiomDb db;
  return db;
}

Scheme predicate_axiom(const std::string& pred, uint32_t arity, uint32_t position) {
  if (position < 1 || position > arity)
    throw std::invalid_argument("predicate axiom position out of range");
  // x0 = x1 -> ( P(.., x0, ..) -> P(.., x1, ..) ), side variables from x2 on.
  std::vector<Var> lhs_args, rhs_args;
  uint32_t side = 2;
  for (uint32_t k = 1; k <= arity; ++k) {
    if (k == position) {
      lhs_args.push_back(meta_var(0));
      rhs_args.push_back(meta_var(1));
    } else {
      lhs_args.push_back(meta_var(side));
      rhs_args.push_back(meta_var(side));
      ++side;
    }
  }
  Formula body = Formula::implies(Formula::pred(pred, lhs_args), Formula::pred(pred, rhs_args));
  return Scheme(Formula::implies(Formula::equals(meta_var(0), meta_var(1)), std::move(body)));
}

Scheme gen_p_axiom(const std::string& pred, uint32_t arity) {
  // -. A. x0 x0 = x1 -> ( ... -> ( -. A. x0 x0 = xn -> ( P(x1..xn) -> A. x0 P(x1..xn) ) ) ... )
  std::vector<Var> args;
  for (uint32_t k = 1; k <= arity; ++k) args.push_back(meta_var(k));
  Formula atom = Formula::pred(pred, args);
  Formula body = Formula::implies(atom, Formula::forall(meta_var(0), atom));
  for (uint32_t k = arity; k >= 1; --k) {
    Formula ante = Formula::negation(
        Formula::forall(meta_var(0), Formula::equals(meta_var(0), meta_var(k))));
    body = Formula::implies(std::move(ante), std::move(body));
  }
  return Scheme(std::move(body));
}

std::vector<AxiomEntry> predicate_axioms(const Language& lang, bool with_gen_p) {
  std::vector<AxiomEntry> out;
  for (const auto& [name, arity] : lang.predicates()) {
    for (uint32_t j = 1; j <= arity; ++j) {
      AxiomEntry e;
      e.label = "ax-" + name + std::to_string(j);
      e.bloc = AxiomBloc::Predicate;
      e.scheme = predicate_axiom(name, arity, j);
      out.push_back(std::move(e));
    }
    if (with_gen_p && arity > 0) {
      AxiomEntry e;
      e.label = "gen-" + name;
      e.bloc = AxiomBloc::Predicate;
      e.scheme = gen_p_axiom(name, arity);
      out.push_back(std::move(e));
    }
  }
  return out;
}

}  // namespace schemata
