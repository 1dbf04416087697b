// Scheme-level proofs with explicit justifications, their DV conditions, and
// the substitution / transform actions on whole proofs.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "schemata/scheme.hpp"

namespace schemata {

using AxiomSet = std::map<std::string, Scheme>;

struct ProofLine {
  Formula statement;

  enum class Kind : uint8_t { Hypothesis, ByAxiom } kind = Kind::ByAxiom;
  std::string hyp_name;             // Hypothesis
  std::string axiom_label;          // ByAxiom
  Substitution subst;               // ByAxiom: instantiation of the axiom
  std::vector<size_t> premises;     // ByAxiom: earlier line indices (0-based)

  static ProofLine hypothesis(Formula stmt, std::string name);
  static ProofLine by_axiom(Formula stmt, std::string label, Substitution s,
                            std::vector<size_t> premises = {});
};

struct ProofScript {
  std::string name;
  Scheme target;
  std::vector<std::string> hyp_names;  // parallel to target.hypotheses()
  std::vector<ProofLine> lines;

  MvSet occurring_mvs() const;  // over all lines and the target
};

// DV(P) = DV(target) plus every pair {dummy, other} with dummy occurring in
// the lines but not in the target.
DvSet proof_dv(const ProofScript& p);

enum class VerifyError : uint8_t {
  None,
  UnknownAxiom,
  PremiseOutOfOrder,
  WrongPremiseCount,
  PremiseMismatch,
  LineMismatch,
  DVViolation,
  IllegitimateSubstitution,
  UnknownHypothesis,
  WrongConclusion,
};

std::string to_string(VerifyError e);

struct VerifyReport {
  bool ok = true;
  VerifyError error = VerifyError::None;
  size_t line = 0;  // 0-based failing line; lines.size() for target-level errors
  std::string detail;

  explicit operator bool() const { return ok; }
};

// Checks every line against the axiom set: the cited substitution must be
// legitimate, reproduce the statement and the cited premises positionally,
// and propagate the axiom's DV conditions into DV(P). The final line must be
// the target's conclusion.
VerifyReport verify_proof(const ProofScript& p, const AxiomSet& axioms);

// Dummy renaming per the index-shift rule: each dummy m_i becomes m_{i+N+1},
// N the largest index active in the substitution. Deterministic, so
// substituted proofs are reproducible bit for bit.
ProofScript rename_dummies(const ProofScript& p, int64_t shift_base);

// Applies a substitution legitimate on the target: dummies renamed, then the
// substitution composed into every statement and justification. The result
// verifies against the same axiom set.
ProofScript subst_proof(const Substitution& s, const ProofScript& p);

struct IllegitimateTransform : std::runtime_error {
  IllegitimateTransform(const std::string& msg, size_t line_index)
      : std::runtime_error(msg), line(line_index) {}
  size_t line;
};

// Applies the (i,j)-transform to every statement, the target, and each
// justification. A justification is rewritten by transforming its formula
// images, or by composing x_j <- x_i, whichever reproduces the transformed
// line; if neither does, the transform does not act on proofs of this shape
// and IllegitimateTransform is thrown (with the offending line).
ProofScript transform_proof(uint32_t i, uint32_t j, const ProofScript& p, const AxiomSet& axioms);

}  // namespace schemata
