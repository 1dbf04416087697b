// Object variables and formulas, object-instantiation, the object-like
// embedding, finite first-order model evaluation (with nonstandard
// quantification domains), and the pure-equality truth decision.
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "schemata/scheme.hpp"

namespace schemata {

// A pair (hypotheses, conclusion) of object formulas; DV data does not
// survive object-instantiation.
struct FormulaWithHypotheses {
  std::vector<Formula> hypotheses;
  Formula conclusion;
};

struct MissingMapping : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Applies an object substitution (total on the scheme's occurring
// metavariables, images at the object level) after the usual DV check.
FormulaWithHypotheses object_instantiate(const Substitution& tau, const Scheme& s);

// v_j -> x_j throughout, all DV pairs among occurring metavariables added.
Scheme embed_object_like(const FormulaWithHypotheses& f);
Formula embed_formula(const Formula& object_formula);

// Finite model: domain {0..n-1}, equality an arbitrary binary relation,
// per-predicate tuple tables, and a quantification domain that may be a
// proper subset of the domain of discourse.
struct FirstOrderModel {
  uint32_t domain_size = 1;
  Language language;
  std::set<std::pair<uint32_t, uint32_t>> eq_graph;
  std::map<std::string, std::set<std::vector<uint32_t>>> predicate_tables;
  std::vector<uint32_t> quant_domain;  // nonempty; defaults to the whole domain

  static FirstOrderModel standard(uint32_t n);  // true equality, full quantification
  void default_quant_domain();
  bool eq(uint32_t a, uint32_t b) const { return eq_graph.count({a, b}) > 0; }
  std::string validate() const;  // empty when well-formed
};

using Assignment = std::map<uint32_t, uint32_t>;

struct UnassignedVariable : std::runtime_error {
  using std::runtime_error::runtime_error;
};

bool fo_eval(const FirstOrderModel& m, const Formula& f, const Assignment& asg);

// Verdict of checking a scheme against a finite model.
struct FoWitness {
  FormulaWithHypotheses instance;
  Assignment assignment;
  std::string describe() const;
};

struct FoVerdict {
  bool validated = false;
  std::optional<FoWitness> witness;  // present when falsified
  std::string bound_note;            // enumeration bounds used for validation
  bool surrogate_refuted = false;    // abstract refutation without a concrete witness
};

// Falsification is exact (concrete object instance plus assignment, found by
// brute force over a small formula pool). Validation is a bounded
// over-approximation: formula metavariables range over arbitrary truth
// functions on the displayed variables plus `surrogate_support` fresh ones,
// which covers every definable predicate on that support.
FoVerdict fo_validates_scheme(const FirstOrderModel& m, const Scheme& s, uint32_t surrogate_support);

// Truth decision for hypothesis-free pure-equality schemes without formula
// metavariables: every identification pattern of the variable metavariables
// (respecting DV) is checked for validity over domain sizes 1..B with B =
// quantifier depth + free variable count.
bool decide_eq_truth(const Scheme& s);

// Same decision with the per-size detail: result[k] = valid at domain size k+1.
struct EqTruthDetail {
  bool truth = false;
  uint32_t bound = 0;
  std::vector<bool> valid_at_size;  // index k: size k+1, up to the max bound
};
EqTruthDetail decide_eq_truth_detail(const Scheme& s);

// All set partitions of `items`; DV-paired elements never share a block.
std::vector<std::vector<uint32_t>> identification_patterns(const std::vector<uint32_t>& var_indices,
                                                           const DvSet& dv);

}  // namespace schemata
