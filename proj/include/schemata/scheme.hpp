// Schemes with DV conditions, substitutions, and the instance relation.
#pragma once

#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "schemata/syntax.hpp"

namespace schemata {

// An unordered pair of distinct metavariables.
struct DvPair {
  Metavariable a, b;  // normalized: a < b

  DvPair(Metavariable m, Metavariable n);
  friend bool operator==(const DvPair&, const DvPair&) = default;
  friend auto operator<=>(const DvPair&, const DvPair&) = default;
};

std::string to_string(const DvPair& p);

class DvSet {
 public:
  DvSet() = default;
  DvSet(std::initializer_list<DvPair> ps) : pairs_(ps) {}

  void insert(Metavariable m, Metavariable n) { pairs_.insert(DvPair(m, n)); }
  void insert(const DvPair& p) { pairs_.insert(p); }
  void merge(const DvSet& other) { pairs_.insert(other.pairs_.begin(), other.pairs_.end()); }
  bool contains(Metavariable m, Metavariable n) const;
  bool contains_all(const DvSet& other) const;
  bool empty() const { return pairs_.empty(); }
  size_t size() const { return pairs_.size(); }
  const std::set<DvPair>& pairs() const { return pairs_; }

  // Drop pairs not entirely within `keep` (the paper's P2(OC) convention).
  DvSet restricted_to(const MvSet& keep) const;

  friend bool operator==(const DvSet&, const DvSet&) = default;

 private:
  std::set<DvPair> pairs_;
};

// Type-preserving substitution with finite support; identity where unmapped.
// The same shape serves meta-level substitutions (x -> x, f -> metaformula)
// and object substitutions (x -> v, f -> object formula).
class Substitution {
 public:
  Substitution() = default;

  void set_var(uint32_t mv_index, Var image);
  void set_fm(uint32_t mv_index, Formula image);

  Var var_image(uint32_t mv_index) const;           // identity if unmapped
  std::optional<Formula> fm_image(uint32_t mv_index) const;

  const std::map<uint32_t, Var>& var_map() const { return var_map_; }
  const std::map<uint32_t, Formula>& fm_map() const { return fm_map_; }

  bool is_identity() const;
  bool maps_into_meta() const;    // all images at the scheme level
  bool maps_into_object() const;  // all images at the object level

  // Metavariables occurring in the image of m (empty for object images).
  MvSet image_occurring(Metavariable m) const;

  // Largest index N such that m_N is touched by or occurs in an image of
  // this substitution, or -1 if the substitution is the identity. Drives the
  // dummy-renaming rule for proofs.
  int64_t max_active_index() const;

  std::string describe() const;

 private:
  std::map<uint32_t, Var> var_map_;
  std::map<uint32_t, Formula> fm_map_;
};

// Plain capture-permitting replacement of metavariables.
Formula apply_subst(const Substitution& s, const Formula& f);

// Composition acting as "apply `first`, then `second`":
// apply(compose(second, first), f) == apply(second, apply(first, f)).
Substitution compose(const Substitution& second, const Substitution& first);

// DV propagation: { {m,n} | exists {m',n'} in d with m in OC(s(m')),
// n in OC(s(n')) }, self-pairs excluded.
DvSet propagate_dv(const DvSet& d, const Substitution& s);

class Scheme {
 public:
  Scheme() = default;
  // DV pairs over non-occurring metavariables are dropped at construction.
  Scheme(std::vector<Formula> hypotheses, Formula conclusion, DvSet dv = {});
  explicit Scheme(Formula conclusion, DvSet dv = {});

  const std::vector<Formula>& hypotheses() const { return hyps_; }
  const Formula& conclusion() const { return concl_; }
  const DvSet& dv() const { return dv_; }

  MvSet occurring_mvs() const;
  bool hypothesis_free() const { return hyps_.empty(); }

  std::string describe() const;

  // Hypotheses compared as multisets, conclusion and DV exactly.
  friend bool operator==(const Scheme& a, const Scheme& b);

 private:
  std::vector<Formula> hyps_;
  Formula concl_;
  DvSet dv_;
};

struct LegitimacyViolation {
  DvPair pair;
  std::string shared;  // token of a variable common to both images ("x3" or "v0")
};

// Empty result means legitimate; otherwise the first violated pair.
std::optional<LegitimacyViolation> check_legitimate(const Substitution& s, const Scheme& scheme);

struct IllegitimateSubstitution : std::runtime_error {
  explicit IllegitimateSubstitution(const LegitimacyViolation& v);
  LegitimacyViolation violation;
};

// Raised by decision procedures when a scheme falls outside their class.
struct UnsupportedScheme : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Legitimate substitution followed by the addition of extra DV conditions;
// the result's DV set is restricted to its occurring metavariables.
Scheme instantiate(const Substitution& s, const Scheme& scheme, const DvSet& extra_dv = {});

// One-way matching: a witnessing substitution sigma with psi_i = phi_i^sigma
// (hypotheses as multisets), sigma legitimate on phi, DV(phi)^sigma within
// DV(psi). Returns nothing when psi is not an instance of phi.
std::optional<Substitution> is_instance(const Scheme& psi, const Scheme& phi);

// Formula-level one-way matching (no DV bookkeeping).
std::optional<Substitution> match_formula(const Formula& templ, const Formula& target);

}  // namespace schemata
