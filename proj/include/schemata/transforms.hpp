// (i,j)- and {i,j}-transforms, non-supertruth certificates, the
// quantifier-free supertruth decision, and bounded hull closure.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "schemata/scheme.hpp"

namespace schemata {

struct TransformSpec {
  uint32_t i = 0;
  uint32_t j = 0;
  bool symmetric = false;  // {i,j}-transform: (i,j) then (j,i), smaller first

  std::string describe() const;
};

// Replace every occurrence of x_j lying inside an i-quantified subformula
// with x_i. Formula metavariables are opaque; occurrences of x_j outside
// every such subformula stay.
Formula transform(uint32_t i, uint32_t j, const Formula& f);

// Componentwise transform; DV conditions carried over (then restricted to
// occurring metavariables). Legitimate iff {x_i, x_j} not in DV.
Scheme transform_scheme(uint32_t i, uint32_t j, const Scheme& s);

// {i,j}-transform: the (i,j)- then the (j,i)-transform, smaller index first.
Formula sym_transform(uint32_t i, uint32_t j, const Formula& f);
Scheme sym_transform_scheme(uint32_t i, uint32_t j, const Scheme& s);

Formula apply_transform(const TransformSpec& t, const Formula& f);
Scheme apply_transform_scheme(const TransformSpec& t, const Scheme& s);

bool transform_legitimate(uint32_t i, uint32_t j, const Scheme& s);

struct IllegitimateSchemeTransform : std::runtime_error {
  IllegitimateSchemeTransform(uint32_t i, uint32_t j)
      : std::runtime_error("illegitimate transform: {x" + std::to_string(i) + ",x" +
                           std::to_string(j) + "} is a DV condition"),
        i(i), j(j) {}
  uint32_t i, j;
};

// A checkable witness that a scheme is not supertrue (resp. semisupertrue):
// an instance, a transform of it, optionally a further substitution, whose
// result the pure-equality decision procedure refutes.
struct SupertruthCertificate {
  std::string name;
  Scheme target;
  Substitution instance_subst;
  TransformSpec transform;
  std::optional<Substitution> then_subst;
};

enum class SupertruthMode : uint8_t { Supertruth, Semisupertruth };

struct SupertruthReport {
  bool ok = false;
  std::string detail;
  Scheme instance;
  Scheme transformed;
  Scheme refuted;  // after the optional second substitution

  explicit operator bool() const { return ok; }
};

SupertruthReport verify_not_supertrue(const SupertruthCertificate& c, SupertruthMode mode);

// Prop: a true quantifier-free scheme is supertrue. Decides truth of a
// quantifier-free pure-equality scheme by two-valued evaluation over formula
// metavariable values crossed with DV-respecting identification patterns.
bool supertrue_quantifier_free(const Scheme& s);

struct HullResult {
  std::vector<Scheme> schemes;
  bool truncated = false;
};

// Bounded closure under legitimate (i,j)-transforms (indices occurring plus
// one fresh) and a fixed instantiation grammar: metavariable permutations,
// atomic plugs, single-connective plugs.
HullResult hull_closure(const std::vector<Scheme>& start, uint32_t depth, size_t size_bound);

}  // namespace schemata
