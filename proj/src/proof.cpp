#include "schemata/proof.hpp"

#include <algorithm>
#include <sstream>

#include "schemata/transforms.hpp"

namespace schemata {

ProofLine ProofLine::hypothesis(Formula stmt, std::string name) {
  ProofLine l;
  l.statement = std::move(stmt);
  l.kind = Kind::Hypothesis;
  l.hyp_name = std::move(name);
  return l;
}

ProofLine ProofLine::by_axiom(Formula stmt, std::string label, Substitution s,
                              std::vector<size_t> premises) {
  ProofLine l;
  l.statement = std::move(stmt);
  l.kind = Kind::ByAxiom;
  l.axiom_label = std::move(label);
  l.subst = std::move(s);
  l.premises = std::move(premises);
  return l;
}

MvSet ProofScript::occurring_mvs() const {
  MvSet out = target.occurring_mvs();
  for (const ProofLine& l : lines) collect_occurring(l.statement, out);
  return out;
}

DvSet proof_dv(const ProofScript& p) {
  DvSet dv = p.target.dv();
  MvSet all = p.occurring_mvs();
  MvSet of_target = p.target.occurring_mvs();
  for (Metavariable m : all) {
    if (of_target.count(m)) continue;  // not a dummy
    for (Metavariable n : all)
      if (m != n) dv.insert(m, n);
  }
  return dv;
}

std::string to_string(VerifyError e) {
  switch (e) {
    case VerifyError::None: return "ok";
    case VerifyError::UnknownAxiom: return "UnknownAxiom";
    case VerifyError::PremiseOutOfOrder: return "PremiseOutOfOrder";
    case VerifyError::WrongPremiseCount: return "WrongPremiseCount";
    case VerifyError::PremiseMismatch: return "PremiseMismatch";
    case VerifyError::LineMismatch: return "LineMismatch";
    case VerifyError::DVViolation: return "DVViolation";
    case VerifyError::IllegitimateSubstitution: return "IllegitimateSubstitution";
    case VerifyError::UnknownHypothesis: return "UnknownHypothesis";
    case VerifyError::WrongConclusion: return "WrongConclusion";
  }
  return "?";
}

namespace {

VerifyReport fail(VerifyError e, size_t line, std::string detail) {
  return VerifyReport{false, e, line, std::move(detail)};
}

}  // namespace

VerifyReport verify_proof(const ProofScript& p, const AxiomSet& axioms) {
  const DvSet dvp = proof_dv(p);

  for (size_t i = 0; i < p.lines.size(); ++i) {
    const ProofLine& l = p.lines[i];
    if (l.kind == ProofLine::Kind::Hypothesis) {
      bool found = false;
      for (size_t h = 0; h < p.target.hypotheses().size(); ++h) {
        if (h < p.hyp_names.size() && p.hyp_names[h] == l.hyp_name) {
          found = true;
          if (!(p.target.hypotheses()[h] == l.statement))
            return fail(VerifyError::LineMismatch, i,
                        "hypothesis " + l.hyp_name + " differs from the target's");
          break;
        }
      }
      if (!found)
        return fail(VerifyError::UnknownHypothesis, i, "no hypothesis named " + l.hyp_name);
      continue;
    }

    auto ax = axioms.find(l.axiom_label);
    if (ax == axioms.end())
      return fail(VerifyError::UnknownAxiom, i, "axiom " + l.axiom_label + " not in scope");
    const Scheme& axiom = ax->second;

    for (size_t k : l.premises)
      if (k >= i) return fail(VerifyError::PremiseOutOfOrder, i,
                              "premise " + std::to_string(k + 1) + " not before line");
    if (l.premises.size() != axiom.hypotheses().size())
      return fail(VerifyError::WrongPremiseCount, i,
                  l.axiom_label + " expects " + std::to_string(axiom.hypotheses().size()) +
                      " premises, got " + std::to_string(l.premises.size()));

    if (auto v = check_legitimate(l.subst, axiom))
      return fail(VerifyError::IllegitimateSubstitution, i,
                  "DV pair " + to_string(v->pair) + " shares " + v->shared);

    for (size_t k = 0; k < l.premises.size(); ++k) {
      Formula expected = apply_subst(l.subst, axiom.hypotheses()[k]);
      if (!(expected == p.lines[l.premises[k]].statement))
        return fail(VerifyError::PremiseMismatch, i,
                    "premise " + std::to_string(l.premises[k] + 1) + " is not " + render(expected));
    }

    Formula concl = apply_subst(l.subst, axiom.conclusion());
    if (!(concl == l.statement))
      return fail(VerifyError::LineMismatch, i,
                  "statement differs from " + l.axiom_label + " instance " + render(concl));

    DvSet needed = propagate_dv(axiom.dv(), l.subst);
    if (!dvp.contains_all(needed)) {
      for (const DvPair& q : needed.pairs())
        if (!dvp.pairs().count(q))
          return fail(VerifyError::DVViolation, i,
                      "required DV pair " + to_string(q) + " not implied by DV(P)");
    }
  }

  if (p.lines.empty() || !(p.lines.back().statement == p.target.conclusion()))
    return fail(VerifyError::WrongConclusion, p.lines.size(),
                "final line is not the target conclusion");
  return VerifyReport{};
}

ProofScript rename_dummies(const ProofScript& p, int64_t shift_base) {
  MvSet of_target = p.target.occurring_mvs();
  Substitution rename;
  const uint32_t shift = static_cast<uint32_t>(shift_base + 1);
  for (Metavariable m : p.occurring_mvs()) {
    if (of_target.count(m)) continue;
    if (m.kind == MvKind::Variable)
      rename.set_var(m.index, meta_var(m.index + shift));
    else
      rename.set_fm(m.index, Formula::fm(m.index + shift));
  }
  if (rename.is_identity()) return p;

  ProofScript out = p;
  for (ProofLine& l : out.lines) {
    l.statement = apply_subst(rename, l.statement);
    if (l.kind == ProofLine::Kind::ByAxiom) l.subst = compose(rename, l.subst);
  }
  return out;
}

ProofScript subst_proof(const Substitution& s, const ProofScript& p) {
  if (auto v = check_legitimate(s, p.target)) throw IllegitimateSubstitution(*v);

  // Shift past everything active in the substitution (the index-shift rule)
  // and past the target's own indices, so renamed dummies stay dummies.
  ProofScript q = p;
  if (!s.is_identity()) {
    int64_t base = s.max_active_index();
    for (Metavariable m : p.target.occurring_mvs())
      base = std::max<int64_t>(base, m.index);
    q = rename_dummies(p, base);
  }
  ProofScript out;
  out.name = q.name;
  out.hyp_names = q.hyp_names;
  out.target = instantiate(s, q.target);
  out.lines.reserve(q.lines.size());
  for (const ProofLine& l : q.lines) {
    ProofLine n = l;
    n.statement = apply_subst(s, l.statement);
    if (l.kind == ProofLine::Kind::ByAxiom) n.subst = compose(s, l.subst);
    out.lines.push_back(std::move(n));
  }
  return out;
}

ProofScript transform_proof(uint32_t i, uint32_t j, const ProofScript& p, const AxiomSet& axioms) {
  const DvSet dvp = proof_dv(p);
  if (dvp.contains(var_mv(i), var_mv(j)))
    throw IllegitimateTransform("{x" + std::to_string(i) + ",x" + std::to_string(j) +
                                    "} is a DV condition of the proof",
                                p.lines.size());

  ProofScript out;
  out.name = p.name;
  out.hyp_names = p.hyp_names;
  out.target = transform_scheme(i, j, p.target);
  out.lines.reserve(p.lines.size());

  Substitution collapse;  // x_j <- x_i
  collapse.set_var(j, meta_var(i));

  for (size_t k = 0; k < p.lines.size(); ++k) {
    const ProofLine& l = p.lines[k];
    ProofLine n = l;
    n.statement = transform(i, j, l.statement);
    if (l.kind == ProofLine::Kind::ByAxiom) {
      auto ax = axioms.find(l.axiom_label);
      if (ax == axioms.end())
        throw IllegitimateTransform("axiom " + l.axiom_label + " not in scope", k);

      // Candidate rewrites of the justification. Which one reproduces the
      // transformed line depends on whether the transform acts inside the
      // substituted images only, or captures across the axiom's own binder.
      Substitution images_transformed;
      for (const auto& [idx, v] : l.subst.var_map()) images_transformed.set_var(idx, v);
      for (const auto& [idx, f] : l.subst.fm_map())
        images_transformed.set_fm(idx, transform(i, j, f));
      Substitution collapsed = compose(collapse, l.subst);

      bool ok = false;
      for (const Substitution* cand : {&images_transformed, &collapsed}) {
        if (check_legitimate(*cand, ax->second)) continue;
        if (!(apply_subst(*cand, ax->second.conclusion()) == n.statement)) continue;
        bool prem_ok = true;
        for (size_t m = 0; m < l.premises.size() && prem_ok; ++m) {
          Formula want = apply_subst(*cand, ax->second.hypotheses()[m]);
          prem_ok = want == transform(i, j, p.lines[l.premises[m]].statement);
        }
        if (!prem_ok) continue;
        n.subst = *cand;
        ok = true;
        break;
      }
      if (!ok)
        throw IllegitimateTransform("line " + std::to_string(k + 1) + " (" + l.axiom_label +
                                        ") does not survive the (" + std::to_string(i) + "," +
                                        std::to_string(j) + ")-transform",
                                    k);
    }
    out.lines.push_back(std::move(n));
  }

  VerifyReport r = verify_proof(out, axioms);
  if (!r)
    throw IllegitimateTransform("transformed proof fails at line " + std::to_string(r.line + 1) +
                                    ": " + to_string(r.error),
                                r.line);
  return out;
}

}  // namespace schemata
