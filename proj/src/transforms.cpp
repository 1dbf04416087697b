#include "schemata/transforms.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "schemata/objectlevel.hpp"

namespace schemata {

std::string TransformSpec::describe() const {
  std::string open = symmetric ? "{" : "(";
  std::string close = symmetric ? "}" : ")";
  return open + std::to_string(i) + "," + std::to_string(j) + close + "-transform";
}

namespace {

Formula transform_rec(uint32_t i, uint32_t j, const Formula& f, bool in_scope) {
  auto map_var = [&](Var v) {
    if (in_scope && v == meta_var(j)) return meta_var(i);
    return v;
  };
  switch (f.kind()) {
    case Formula::Kind::FmVar: return f;
    case Formula::Kind::Equals:
      return Formula::equals(map_var(f.eq_lhs()), map_var(f.eq_rhs()));
    case Formula::Kind::Pred: {
      std::vector<Var> args;
      args.reserve(f.pred_args().size());
      for (Var v : f.pred_args()) args.push_back(map_var(v));
      return Formula::pred(f.pred_name(), std::move(args));
    }
    case Formula::Kind::Not:
      return Formula::negation(transform_rec(i, j, f.child(), in_scope));
    case Formula::Kind::Implies:
      return Formula::implies(transform_rec(i, j, f.lhs(), in_scope),
                              transform_rec(i, j, f.rhs(), in_scope));
    case Formula::Kind::Forall: {
      Var b = map_var(f.bound());
      bool inner = in_scope || f.bound() == meta_var(i);
      return Formula::forall(b, transform_rec(i, j, f.child(), inner));
    }
  }
  return f;
}

}  // namespace

Formula transform(uint32_t i, uint32_t j, const Formula& f) {
  if (i == j) return f;
  return transform_rec(i, j, f, false);
}

bool transform_legitimate(uint32_t i, uint32_t j, const Scheme& s) {
  if (i == j) return true;
  return !s.dv().contains(var_mv(i), var_mv(j));
}

Scheme transform_scheme(uint32_t i, uint32_t j, const Scheme& s) {
  if (!transform_legitimate(i, j, s)) throw IllegitimateSchemeTransform(i, j);
  std::vector<Formula> hyps;
  hyps.reserve(s.hypotheses().size());
  for (const Formula& h : s.hypotheses()) hyps.push_back(transform(i, j, h));
  // DV conditions carried over; the Scheme constructor drops pairs on
  // metavariables that no longer occur.
  return Scheme(std::move(hyps), transform(i, j, s.conclusion()), s.dv());
}

Formula sym_transform(uint32_t i, uint32_t j, const Formula& f) {
  uint32_t a = std::min(i, j), b = std::max(i, j);
  return transform(b, a, transform(a, b, f));
}

Scheme sym_transform_scheme(uint32_t i, uint32_t j, const Scheme& s) {
  if (!transform_legitimate(i, j, s)) throw IllegitimateSchemeTransform(i, j);
  uint32_t a = std::min(i, j), b = std::max(i, j);
  return transform_scheme(b, a, transform_scheme(a, b, s));
}

Formula apply_transform(const TransformSpec& t, const Formula& f) {
  return t.symmetric ? sym_transform(t.i, t.j, f) : transform(t.i, t.j, f);
}

Scheme apply_transform_scheme(const TransformSpec& t, const Scheme& s) {
  return t.symmetric ? sym_transform_scheme(t.i, t.j, s) : transform_scheme(t.i, t.j, s);
}

SupertruthReport verify_not_supertrue(const SupertruthCertificate& c, SupertruthMode mode) {
  SupertruthReport r;
  if (auto v = check_legitimate(c.instance_subst, c.target)) {
    r.detail = "IllegitimateStep: instance substitution violates " + to_string(v->pair);
    return r;
  }
  r.instance = instantiate(c.instance_subst, c.target);

  if (mode == SupertruthMode::Semisupertruth) {
    if (!c.transform.symmetric) {
      r.detail = "IllegitimateStep: semisupertruth uses symmetric transforms";
      return r;
    }
    bool fm_free = !has_formula_mv(r.instance.conclusion());
    for (const Formula& h : r.instance.hypotheses()) fm_free = fm_free && !has_formula_mv(h);
    if (!fm_free) {
      r.detail = "IllegitimateStep: semisupertruth instance must be formula-metavariable-free";
      return r;
    }
  }

  if (!transform_legitimate(c.transform.i, c.transform.j, r.instance)) {
    r.detail = "IllegitimateStep: " + c.transform.describe() + " blocked by a DV condition";
    return r;
  }
  r.transformed = apply_transform_scheme(c.transform, r.instance);

  r.refuted = r.transformed;
  if (c.then_subst) {
    if (auto v = check_legitimate(*c.then_subst, r.transformed)) {
      r.detail = "IllegitimateStep: second-level substitution violates " + to_string(v->pair);
      return r;
    }
    r.refuted = instantiate(*c.then_subst, r.transformed);
  }

  if (!r.refuted.hypothesis_free()) {
    // Rule-form target: hypotheses of the refuted scheme must be supertrue.
    // Only the quantifier-free class is decidable here (a true quantifier-free
    // scheme is supertrue); anything else is refused.
    for (const Formula& h : r.refuted.hypotheses()) {
      Scheme hyp_scheme(h, r.refuted.dv());
      bool ok;
      try {
        ok = supertrue_quantifier_free(hyp_scheme);
      } catch (const UnsupportedScheme&) {
        r.detail = "HypothesisNotEstablished: no decision procedure applies to " + render(h);
        return r;
      }
      if (!ok) {
        r.detail = "HypothesisNotEstablished: " + render(h);
        return r;
      }
    }
  }

  bool refuted;
  try {
    refuted = !decide_eq_truth(Scheme(r.refuted.conclusion(), r.refuted.dv()));
  } catch (const UnsupportedScheme& e) {
    r.detail = std::string("RefutationFailed: ") + e.what();
    return r;
  }
  if (!refuted) {
    r.detail = "RefutationFailed: transformed scheme is still true";
    return r;
  }

  r.ok = true;
  r.detail = (mode == SupertruthMode::Semisupertruth ? "not semisupertrue: " : "not supertrue: ") +
             c.transform.describe() + " of " + r.instance.describe() + " refuted";
  return r;
}

bool supertrue_quantifier_free(const Scheme& s) {
  if (has_quantifier(s.conclusion())) throw UnsupportedScheme("quantifier present");
  for (const Formula& h : s.hypotheses())
    if (has_quantifier(h)) throw UnsupportedScheme("quantifier present");
  if (has_predicate(s.conclusion())) throw UnsupportedScheme("nonlogical predicate present");
  for (const Formula& h : s.hypotheses())
    if (has_predicate(h)) throw UnsupportedScheme("nonlogical predicate present");

  std::vector<uint32_t> vars, fms;
  for (Metavariable m : s.occurring_mvs())
    (m.kind == MvKind::Variable ? vars : fms).push_back(m.index);

  for (const auto& pattern : identification_patterns(vars, s.dv())) {
    std::map<uint32_t, uint32_t> block;
    for (size_t k = 0; k < vars.size(); ++k) block[vars[k]] = pattern[k];

    // two-valued evaluation; equality atoms read the identification pattern
    for (uint64_t bits = 0; bits < (uint64_t{1} << fms.size()); ++bits) {
      std::map<uint32_t, bool> fmval;
      for (size_t k = 0; k < fms.size(); ++k) fmval[fms[k]] = (bits >> k) & 1;

      std::function<bool(const Formula&)> ev = [&](const Formula& f) -> bool {
        switch (f.kind()) {
          case Formula::Kind::FmVar: return fmval.at(f.fm_index());
          case Formula::Kind::Equals:
            return block.at(f.eq_lhs().index) == block.at(f.eq_rhs().index);
          case Formula::Kind::Not: return !ev(f.child());
          case Formula::Kind::Implies: return !ev(f.lhs()) || ev(f.rhs());
          default: throw UnsupportedScheme("unexpected node");
        }
      };

      bool hyps = true;
      for (const Formula& h : s.hypotheses()) hyps = hyps && ev(h);
      if (hyps && !ev(s.conclusion())) return false;
    }
  }
  return true;
}

namespace {

std::string scheme_key(const Scheme& s) { return s.describe(); }

std::vector<Substitution> generator_substitutions(const Scheme& s) {
  std::vector<Substitution> out;
  std::vector<uint32_t> vars, fms;
  for (Metavariable m : s.occurring_mvs())
    (m.kind == MvKind::Variable ? vars : fms).push_back(m.index);
  uint32_t fresh = vars.empty() ? 0 : *std::max_element(vars.begin(), vars.end()) + 1;

  // metavariable swaps
  for (size_t a = 0; a < vars.size(); ++a)
    for (size_t b = a + 1; b < vars.size(); ++b) {
      Substitution sub;
      sub.set_var(vars[a], meta_var(vars[b]));
      sub.set_var(vars[b], meta_var(vars[a]));
      out.push_back(sub);
    }
  // variable identifications and a fresh variable
  for (size_t a = 0; a < vars.size(); ++a)
    for (size_t b = 0; b < vars.size(); ++b)
      if (a != b) {
        Substitution sub;
        sub.set_var(vars[a], meta_var(vars[b]));
        out.push_back(sub);
      }
  for (uint32_t v : vars) {
    Substitution sub;
    sub.set_var(v, meta_var(fresh));
    out.push_back(sub);
  }
  // atomic and single-connective plugs for formula metavariables
  for (uint32_t f : fms) {
    std::vector<Formula> plugs;
    std::vector<uint32_t> pvars = vars;
    pvars.push_back(fresh);
    for (uint32_t a : pvars)
      for (uint32_t b : pvars) plugs.push_back(Formula::equals(meta_var(a), meta_var(b)));
    plugs.push_back(Formula::negation(Formula::fm(f)));
    plugs.push_back(Formula::implies(Formula::fm(f), Formula::fm(f + 1)));
    for (uint32_t a : pvars) plugs.push_back(Formula::forall(meta_var(a), Formula::fm(f)));
    for (Formula& p : plugs) {
      Substitution sub;
      sub.set_fm(f, std::move(p));
      out.push_back(sub);
    }
  }
  return out;
}

}  // namespace

HullResult hull_closure(const std::vector<Scheme>& start, uint32_t depth, size_t size_bound) {
  HullResult res;
  std::set<std::string> seen;
  std::vector<Scheme> frontier;
  for (const Scheme& s : start)
    if (seen.insert(scheme_key(s)).second) {
      res.schemes.push_back(s);
      frontier.push_back(s);
    }

  for (uint32_t round = 0; round < depth && !frontier.empty(); ++round) {
    std::vector<Scheme> next;
    for (const Scheme& s : frontier) {
      std::set<uint32_t> idx;
      for (Metavariable m : s.occurring_mvs())
        if (m.kind == MvKind::Variable) idx.insert(m.index);
      uint32_t fresh = idx.empty() ? 0 : *idx.rbegin() + 1;
      idx.insert(fresh);

      std::vector<Scheme> produced;
      for (uint32_t i : idx)
        for (uint32_t j : idx)
          if (i != j && transform_legitimate(i, j, s)) produced.push_back(transform_scheme(i, j, s));
      for (const Substitution& sub : generator_substitutions(s)) {
        if (check_legitimate(sub, s)) continue;
        produced.push_back(instantiate(sub, s));
      }

      for (Scheme& q : produced) {
        if (res.schemes.size() >= size_bound) {
          res.truncated = true;
          return res;
        }
        if (seen.insert(scheme_key(q)).second) {
          res.schemes.push_back(q);
          next.push_back(std::move(q));
        }
      }
    }
    frontier = std::move(next);
  }
  return res;
}

}  // namespace schemata
