// Built-in catalog of the TMM axiom schemes and their variants, the
// subsystem definitions, per-language predicate axiom generators, and the
// correspondence with set.mm labels.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "schemata/proof.hpp"
#include "schemata/scheme.hpp"

namespace schemata {

enum class AxiomBloc : uint8_t {
  Propcalc,
  Modal,
  VacGen,
  Equality,
  Denot,
  Subst,
  AllEq,
  GenEq,
  Variant,
  Predicate,
};

struct AxiomEntry {
  std::string label;
  std::optional<std::string> set_mm_label;
  Scheme scheme;
  AxiomBloc bloc = AxiomBloc::Variant;
};

struct UnknownLabel : std::runtime_error {
  explicit UnknownLabel(const std::string& l) : std::runtime_error("unknown axiom label: " + l) {}
};
struct UnknownSystem : std::runtime_error {
  explicit UnknownSystem(const std::string& n) : std::runtime_error("unknown system: " + n) {}
};

class AxiomDb {
 public:
  AxiomDb();

  const AxiomEntry& get(const std::string& label) const;
  bool has(const std::string& label) const;
  const std::vector<AxiomEntry>& entries() const { return entries_; }

  // Subsystem of TMM by name (propcalc, EQ, modK, ..., TM, TMM).
  std::vector<std::string> system(const std::string& name) const;
  std::vector<std::string> system_names() const;
  bool has_system(const std::string& name) const;

  // Axiom set (label -> scheme) for a label list or system name.
  AxiomSet axiom_set(const std::vector<std::string>& labels) const;
  AxiomSet system_set(const std::string& name) const;

  // (article label, set.mm label) rows of the correspondence table.
  std::vector<std::pair<std::string, std::string>> label_map() const;

 private:
  void add(std::string label, std::optional<std::string> mm, AxiomBloc bloc, Scheme s);
  std::vector<AxiomEntry> entries_;
  std::map<std::string, size_t> index_;
  std::map<std::string, std::vector<std::string>> systems_;
};

const AxiomDb& axiom_db();  // shared immutable catalog

// The sum-of-arities predicate axiom schemes ax-P.j for a language, plus the
// genP generalization schemes when requested.
std::vector<AxiomEntry> predicate_axioms(const Language& lang, bool with_gen_p = false);

Scheme predicate_axiom(const std::string& pred, uint32_t arity, uint32_t position);
Scheme gen_p_axiom(const std::string& pred, uint32_t arity);

}  // namespace schemata
