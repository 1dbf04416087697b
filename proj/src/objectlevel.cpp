#include "schemata/objectlevel.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <sstream>

namespace schemata {

FormulaWithHypotheses object_instantiate(const Substitution& tau, const Scheme& s) {
  if (auto v = check_legitimate(tau, s)) throw IllegitimateSubstitution(*v);
  for (Metavariable m : s.occurring_mvs()) {
    if (m.kind == MvKind::Variable) {
      if (tau.var_image(m.index).kind != VarKind::Object)
        throw MissingMapping("object substitution must map x" + std::to_string(m.index));
    } else {
      auto f = tau.fm_image(m.index);
      if (!f || !is_object_formula(*f))
        throw MissingMapping("object substitution must map f" + std::to_string(m.index) +
                             " to an object formula");
    }
  }
  FormulaWithHypotheses out;
  out.hypotheses.reserve(s.hypotheses().size());
  for (const Formula& h : s.hypotheses()) out.hypotheses.push_back(apply_subst(tau, h));
  out.conclusion = apply_subst(tau, s.conclusion());
  return out;
}

Formula embed_formula(const Formula& f) {
  auto map_var = [](Var v) { return v.kind == VarKind::Object ? meta_var(v.index) : v; };
  switch (f.kind()) {
    case Formula::Kind::FmVar: return f;
    case Formula::Kind::Equals: return Formula::equals(map_var(f.eq_lhs()), map_var(f.eq_rhs()));
    case Formula::Kind::Pred: {
      std::vector<Var> args;
      for (Var v : f.pred_args()) args.push_back(map_var(v));
      return Formula::pred(f.pred_name(), std::move(args));
    }
    case Formula::Kind::Not: return Formula::negation(embed_formula(f.child()));
    case Formula::Kind::Implies:
      return Formula::implies(embed_formula(f.lhs()), embed_formula(f.rhs()));
    case Formula::Kind::Forall:
      return Formula::forall(map_var(f.bound()), embed_formula(f.child()));
  }
  return f;
}

Scheme embed_object_like(const FormulaWithHypotheses& f) {
  std::vector<Formula> hyps;
  hyps.reserve(f.hypotheses.size());
  for (const Formula& h : f.hypotheses) hyps.push_back(embed_formula(h));
  Formula concl = embed_formula(f.conclusion);

  MvSet occ;
  for (const Formula& h : hyps) collect_occurring(h, occ);
  collect_occurring(concl, occ);
  DvSet dv;
  for (auto it = occ.begin(); it != occ.end(); ++it)
    for (auto jt = std::next(it); jt != occ.end(); ++jt) dv.insert(*it, *jt);
  return Scheme(std::move(hyps), std::move(concl), std::move(dv));
}

FirstOrderModel FirstOrderModel::standard(uint32_t n) {
  FirstOrderModel m;
  m.domain_size = n;
  for (uint32_t a = 0; a < n; ++a) m.eq_graph.insert({a, a});
  m.default_quant_domain();
  return m;
}

void FirstOrderModel::default_quant_domain() {
  quant_domain.clear();
  for (uint32_t a = 0; a < domain_size; ++a) quant_domain.push_back(a);
}

std::string FirstOrderModel::validate() const {
  if (domain_size == 0) return "empty domain";
  if (quant_domain.empty()) return "empty quantification domain";
  for (uint32_t a : quant_domain)
    if (a >= domain_size) return "quantification domain exceeds the domain";
  for (auto [a, b] : eq_graph)
    if (a >= domain_size || b >= domain_size) return "equality graph exceeds the domain";
  for (const auto& [name, tuples] : predicate_tables)
    for (const auto& t : tuples)
      for (uint32_t a : t)
        if (a >= domain_size) return "predicate table for " + name + " exceeds the domain";
  return {};
}

bool fo_eval(const FirstOrderModel& m, const Formula& f, const Assignment& asg) {
  auto value_of = [&asg](Var v) {
    if (v.kind != VarKind::Object)
      throw UnassignedVariable("metaformula in object evaluation: " + to_string(v));
    auto it = asg.find(v.index);
    if (it == asg.end()) throw UnassignedVariable("v" + std::to_string(v.index) + " unassigned");
    return it->second;
  };
  switch (f.kind()) {
    case Formula::Kind::FmVar:
      throw UnassignedVariable("formula metavariable in object evaluation");
    case Formula::Kind::Equals:
      return m.eq(value_of(f.eq_lhs()), value_of(f.eq_rhs()));
    case Formula::Kind::Pred: {
      auto it = m.predicate_tables.find(f.pred_name());
      std::vector<uint32_t> tuple;
      tuple.reserve(f.pred_args().size());
      for (Var v : f.pred_args()) tuple.push_back(value_of(v));
      return it != m.predicate_tables.end() && it->second.count(tuple) > 0;
    }
    case Formula::Kind::Not:
      return !fo_eval(m, f.child(), asg);
    case Formula::Kind::Implies:
      return !fo_eval(m, f.lhs(), asg) || fo_eval(m, f.rhs(), asg);
    case Formula::Kind::Forall: {
      if (f.bound().kind != VarKind::Object)
        throw UnassignedVariable("metaformula in object evaluation");
      Assignment inner = asg;
      for (uint32_t d : m.quant_domain) {
        inner[f.bound().index] = d;
        if (!fo_eval(m, f.child(), inner)) return false;
      }
      return true;
    }
  }
  return false;
}

std::string FoWitness::describe() const {
  std::ostringstream os;
  os << render(instance.conclusion);
  if (!assignment.empty()) {
    os << " under";
    for (auto [v, d] : assignment) os << " v" << v << "=" << d;
  }
  return os.str();
}

std::vector<std::vector<uint32_t>> identification_patterns(const std::vector<uint32_t>& vars,
                                                           const DvSet& dv) {
  std::vector<std::vector<uint32_t>> out;
  std::vector<uint32_t> blocks(vars.size(), 0);
  std::function<void(size_t, uint32_t)> rec = [&](size_t pos, uint32_t used) {
    if (pos == vars.size()) {
      out.push_back(blocks);
      return;
    }
    for (uint32_t b = 0; b <= used; ++b) {
      bool ok = true;
      for (size_t k = 0; k < pos && ok; ++k)
        if (blocks[k] == b && dv.contains(var_mv(vars[k]), var_mv(vars[pos]))) ok = false;
      if (!ok) continue;
      blocks[pos] = b;
      rec(pos + 1, b == used ? used + 1 : used);
    }
  };
  rec(0, 0);
  return out;
}

namespace {

// Evaluation of a scheme formula where formula metavariables are abstract
// truth functions over a fixed support, used for bounded validation.
struct SurrogateEnv {
  const FirstOrderModel* model;
  // var metavariable index -> object variable index (from the pattern)
  const std::map<uint32_t, uint32_t>* var_to_obj;
  // fm metavariable index -> (support variable list, truth table bits)
  const std::map<uint32_t, std::pair<std::vector<uint32_t>, uint64_t>>* fm_tables;

  bool eval(const Formula& f, Assignment& asg) const {
    switch (f.kind()) {
      case Formula::Kind::FmVar: {
        const auto& [support, bits] = fm_tables->at(f.fm_index());
        size_t idx = 0;
        for (uint32_t v : support) idx = idx * model->domain_size + asg.at(v);
        return (bits >> idx) & 1;
      }
      case Formula::Kind::Equals:
        return model->eq(asg.at(var_to_obj->at(f.eq_lhs().index)),
                         asg.at(var_to_obj->at(f.eq_rhs().index)));
      case Formula::Kind::Pred: {
        std::vector<uint32_t> tuple;
        for (Var v : f.pred_args()) tuple.push_back(asg.at(var_to_obj->at(v.index)));
        auto it = model->predicate_tables.find(f.pred_name());
        return it != model->predicate_tables.end() && it->second.count(tuple) > 0;
      }
      case Formula::Kind::Not:
        return !eval(f.child(), asg);
      case Formula::Kind::Implies:
        return !eval(f.lhs(), asg) || eval(f.rhs(), asg);
      case Formula::Kind::Forall: {
        uint32_t obj = var_to_obj->at(f.bound().index);
        uint32_t saved = asg.at(obj);
        bool all = true;
        for (uint32_t d : model->quant_domain) {
          asg[obj] = d;
          if (!eval(f.child(), asg)) {
            all = false;
            break;
          }
        }
        asg[obj] = saved;
        return all;
      }
    }
    return false;
  }
};

std::vector<uint32_t> scheme_var_indices(const Scheme& s) {
  std::vector<uint32_t> vars;
  for (Metavariable m : s.occurring_mvs())
    if (m.kind == MvKind::Variable) vars.push_back(m.index);
  return vars;
}

std::vector<uint32_t> scheme_fm_indices(const Scheme& s) {
  std::vector<uint32_t> fms;
  for (Metavariable m : s.occurring_mvs())
    if (m.kind == MvKind::Formula) fms.push_back(m.index);
  return fms;
}

// Formula pool for exact falsification: atoms and negated atoms over the
// given object variables, in the model's language.
std::vector<Formula> falsifier_pool(const FirstOrderModel& m, const std::vector<uint32_t>& objs) {
  std::vector<Formula> pool;
  for (uint32_t a : objs)
    for (uint32_t b : objs) pool.push_back(Formula::equals(object_var(a), object_var(b)));
  for (const auto& [name, arity] : m.language.predicates()) {
    std::vector<std::vector<uint32_t>> args(1);
    for (size_t k = 0; k < arity; ++k) {
      std::vector<std::vector<uint32_t>> next;
      for (const auto& pre : args)
        for (uint32_t v : objs) {
          auto ext = pre;
          ext.push_back(v);
          next.push_back(std::move(ext));
        }
      args = std::move(next);
    }
    for (const auto& tuple : args) {
      std::vector<Var> vs;
      for (uint32_t v : tuple) vs.push_back(object_var(v));
      pool.push_back(Formula::pred(name, vs));
    }
  }
  size_t atoms = pool.size();
  for (size_t k = 0; k < atoms; ++k) pool.push_back(Formula::negation(pool[k]));
  return pool;
}

bool all_assignments(const FirstOrderModel& m, const std::vector<uint32_t>& free_vars,
                     const std::function<bool(const Assignment&)>& pred) {
  Assignment asg;
  std::function<bool(size_t)> rec = [&](size_t pos) -> bool {
    if (pos == free_vars.size()) return pred(asg);
    for (uint32_t d = 0; d < m.domain_size; ++d) {
      asg[free_vars[pos]] = d;
      if (!rec(pos + 1)) return false;
    }
    return true;
  };
  return rec(0);
}

}  // namespace

FoVerdict fo_validates_scheme(const FirstOrderModel& m, const Scheme& s, uint32_t surrogate_support) {
  FoVerdict out;
  std::vector<uint32_t> vars = scheme_var_indices(s);
  std::vector<uint32_t> fms = scheme_fm_indices(s);

  // Exact falsification first: variable metavariables range over
  // identification patterns, formula metavariables over a pool of atomic and
  // negated-atomic object formulas.
  {
    std::vector<uint32_t> objs;
    for (uint32_t k = 0; k < vars.size(); ++k) objs.push_back(k);
    if (objs.empty()) objs.push_back(0);
    std::vector<Formula> pool = falsifier_pool(m, objs);

    for (const auto& pattern : identification_patterns(vars, s.dv())) {
      Substitution tau;
      for (size_t k = 0; k < vars.size(); ++k) tau.set_var(vars[k], object_var(pattern[k]));

      std::vector<size_t> choice(fms.size(), 0);
      while (true) {
        for (size_t k = 0; k < fms.size(); ++k) tau.set_fm(fms[k], pool[choice[k]]);
        if (!check_legitimate(tau, s)) {
          FormulaWithHypotheses inst = object_instantiate(tau, s);
          std::set<uint32_t> fv;
          for (const Formula& h : inst.hypotheses)
            for (uint32_t v : object_vars(h)) fv.insert(v);
          for (uint32_t v : object_vars(inst.conclusion)) fv.insert(v);
          std::vector<uint32_t> fvs(fv.begin(), fv.end());

          // rule semantics: hypotheses true under all assignments
          bool hyps_true = true;
          for (const Formula& h : inst.hypotheses) {
            if (!all_assignments(m, fvs, [&](const Assignment& a) { return fo_eval(m, h, a); })) {
              hyps_true = false;
              break;
            }
          }
          if (hyps_true) {
            Assignment bad;
            bool concl_true = all_assignments(m, fvs, [&](const Assignment& a) {
              if (fo_eval(m, inst.conclusion, a)) return true;
              bad = a;
              return false;
            });
            if (!concl_true) {
              out.validated = false;
              out.witness = FoWitness{std::move(inst), std::move(bad)};
              return out;
            }
          }
        }
        size_t k = 0;
        for (; k < fms.size(); ++k) {
          if (++choice[k] < pool.size()) break;
          choice[k] = 0;
        }
        if (k == fms.size()) break;  // wrapped around (or no formula metavariables)
      }
    }
  }

  // Bounded validation with abstract truth functions.
  for (const auto& pattern : identification_patterns(vars, s.dv())) {
    uint32_t nblocks = pattern.empty() ? 0 : *std::max_element(pattern.begin(), pattern.end()) + 1;
    std::map<uint32_t, uint32_t> var_to_obj;
    for (size_t k = 0; k < vars.size(); ++k) var_to_obj[vars[k]] = pattern[k];

    // support of each formula metavariable: pattern blocks not DV-excluded,
    // plus fresh surrogate variables
    std::map<uint32_t, std::vector<uint32_t>> supports;
    std::vector<uint32_t> all_objs;
    for (uint32_t b = 0; b < nblocks; ++b) all_objs.push_back(b);
    for (uint32_t e = 0; e < surrogate_support; ++e) all_objs.push_back(nblocks + e);
    for (uint32_t fmi : fms) {
      std::vector<uint32_t> sup;
      for (size_t k = 0; k < vars.size(); ++k) {
        if (s.dv().contains(fm_mv(fmi), var_mv(vars[k]))) continue;
        if (std::find(sup.begin(), sup.end(), pattern[k]) == sup.end()) sup.push_back(pattern[k]);
      }
      for (uint32_t e = 0; e < surrogate_support; ++e) sup.push_back(nblocks + e);
      std::sort(sup.begin(), sup.end());
      supports[fmi] = std::move(sup);
    }

    // enumerate truth tables per formula metavariable
    std::vector<uint64_t> table_sizes;
    uint64_t combos = 1;
    for (uint32_t fmi : fms) {
      uint64_t cells = 1;
      for (size_t k = 0; k < supports[fmi].size(); ++k) cells *= m.domain_size;
      if (cells > 16)
        return FoVerdict{false, std::nullopt,
                         "bound infeasible: lower surrogate_support (table would need " +
                             std::to_string(cells) + " cells)",
                         false};
      table_sizes.push_back(uint64_t{1} << cells);
      combos *= table_sizes.back();
      if (combos > (uint64_t{1} << 22))
        return FoVerdict{false, std::nullopt, "bound infeasible: lower surrogate_support", false};
    }

    std::map<uint32_t, std::pair<std::vector<uint32_t>, uint64_t>> fm_tables;
    std::function<bool(size_t)> enum_tables = [&](size_t k) -> bool {
      if (k == fms.size()) {
        SurrogateEnv env{&m, &var_to_obj, &fm_tables};
        bool hyps_true = true;
        for (const Formula& h : s.hypotheses()) {
          bool ht = all_assignments(m, all_objs, [&](const Assignment& a) {
            Assignment mut = a;
            return env.eval(h, mut);
          });
          if (!ht) {
            hyps_true = false;
            break;
          }
        }
        if (!hyps_true) return true;
        return all_assignments(m, all_objs, [&](const Assignment& a) {
          Assignment mut = a;
          return env.eval(s.conclusion(), mut);
        });
      }
      for (uint64_t bits = 0; bits < table_sizes[k]; ++bits) {
        fm_tables[fms[k]] = {supports[fms[k]], bits};
        if (!enum_tables(k + 1)) return false;
      }
      return true;
    };
    if (!enum_tables(0)) {
      out.validated = false;
      out.surrogate_refuted = true;
      out.bound_note = "surrogate refutation (no concrete witness in the atomic pool)";
      return out;
    }
  }

  out.validated = true;
  std::ostringstream note;
  note << "surrogate_support=" << surrogate_support << " over truth functions";
  out.bound_note = note.str();
  return out;
}

namespace {

uint32_t max_domain_cap() {
  if (const char* env = std::getenv("SCHEMATA_MAX_DOMAIN")) {
    int v = std::atoi(env);
    if (v >= 1) return static_cast<uint32_t>(v);
  }
  return 4;
}

}  // namespace

EqTruthDetail decide_eq_truth_detail(const Scheme& s) {
  if (!s.hypothesis_free()) throw UnsupportedScheme("hypotheses present");
  if (has_formula_mv(s.conclusion())) throw UnsupportedScheme("formula metavariable present");
  if (has_predicate(s.conclusion())) throw UnsupportedScheme("nonlogical predicate present");

  EqTruthDetail out;
  std::vector<uint32_t> vars = scheme_var_indices(s);

  uint32_t max_bound = 1;
  struct Case {
    Formula inst;
    std::vector<uint32_t> free_vars;
    uint32_t bound;
  };
  std::vector<Case> cases;
  for (const auto& pattern : identification_patterns(vars, s.dv())) {
    Substitution tau;
    for (size_t k = 0; k < vars.size(); ++k) tau.set_var(vars[k], object_var(pattern[k]));
    Formula inst = apply_subst(tau, s.conclusion());
    auto fv = free_object_vars(inst);
    uint32_t bound = quantifier_depth(inst) + static_cast<uint32_t>(fv.size());
    bound = std::max<uint32_t>(bound, 1);
    max_bound = std::max(max_bound, bound);
    cases.push_back({std::move(inst), {fv.begin(), fv.end()}, bound});
  }

  // Truth is decided by sizes 1..bound (two pure-identity structures of size
  // >= q are q-round equivalent); larger sizes up to the domain cap are
  // evaluated for the per-size report only.
  out.bound = max_bound;
  const uint32_t report_to = std::max(max_bound, max_domain_cap());
  out.valid_at_size.assign(report_to, true);

  out.truth = true;
  for (const Case& c : cases) {
    for (uint32_t n = 1; n <= report_to; ++n) {
      FirstOrderModel m = FirstOrderModel::standard(n);
      bool valid = all_assignments(m, c.free_vars,
                                   [&](const Assignment& a) { return fo_eval(m, c.inst, a); });
      if (!valid) {
        if (n <= c.bound) out.truth = false;
        out.valid_at_size[n - 1] = false;
      }
    }
  }
  return out;
}

bool decide_eq_truth(const Scheme& s) { return decide_eq_truth_detail(s).truth; }

}  // namespace schemata
