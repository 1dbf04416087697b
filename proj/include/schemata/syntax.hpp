// Metavariables, languages, and metaformulas: the syntactic layer shared by
// the scheme level (x0, f0, ...) and the object level (v0, v1, ...).
#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace schemata {

// A variable symbol. Meta variables (xN) stand for object variables (vN);
// the two index spaces are disjoint by construction.
enum class VarKind : uint8_t { Meta, Object };

struct Var {
  VarKind kind = VarKind::Meta;
  uint32_t index = 0;

  friend bool operator==(const Var&, const Var&) = default;
  friend auto operator<=>(const Var&, const Var&) = default;
};

inline Var meta_var(uint32_t i) { return Var{VarKind::Meta, i}; }
inline Var object_var(uint32_t i) { return Var{VarKind::Object, i}; }

std::string to_string(Var v);

// A metavariable proper: either a variable metavariable x_i or a formula
// metavariable f_i. Object variables are not metavariables.
enum class MvKind : uint8_t { Variable, Formula };

struct Metavariable {
  MvKind kind = MvKind::Variable;
  uint32_t index = 0;

  friend bool operator==(const Metavariable&, const Metavariable&) = default;
  friend auto operator<=>(const Metavariable&, const Metavariable&) = default;
};

inline Metavariable var_mv(uint32_t i) { return Metavariable{MvKind::Variable, i}; }
inline Metavariable fm_mv(uint32_t i) { return Metavariable{MvKind::Formula, i}; }

std::string to_string(Metavariable m);

using MvSet = std::set<Metavariable>;

// Nonlogical predicates with arities. Arity 0 predicates are propositional
// constants; equality is builtin and not part of the language.
class Language {
 public:
  Language() = default;
  Language(std::initializer_list<std::pair<std::string, uint32_t>> preds);

  void add_predicate(const std::string& name, uint32_t arity);
  std::optional<uint32_t> arity(const std::string& name) const;
  const std::vector<std::pair<std::string, uint32_t>>& predicates() const { return preds_; }
  bool empty() const { return preds_.empty(); }

 private:
  std::vector<std::pair<std::string, uint32_t>> preds_;
};

// Formula trees. The same node type serves metaformulas (atoms over meta
// variables, formula metavariables allowed) and object formulas (atoms over
// object variables, no formula metavariables). Values are immutable and
// share structure freely.
class Formula {
 public:
  enum class Kind : uint8_t { FmVar, Equals, Pred, Not, Implies, Forall };

  Formula() = default;  // empty; only valid as a placeholder

  static Formula fm(uint32_t index);
  static Formula equals(Var a, Var b);
  static Formula pred(std::string name, std::vector<Var> args);
  static Formula negation(Formula f);
  static Formula implies(Formula lhs, Formula rhs);
  static Formula forall(Var bound, Formula body);

  bool empty() const { return node_ == nullptr; }
  Kind kind() const { return node_->kind; }

  uint32_t fm_index() const { return node_->index; }
  Var eq_lhs() const { return node_->v1; }
  Var eq_rhs() const { return node_->v2; }
  const std::string& pred_name() const { return node_->pred; }
  const std::vector<Var>& pred_args() const { return node_->args; }
  Formula child() const { return Formula(node_->child1); }  // Not, Forall body
  Formula lhs() const { return Formula(node_->child1); }    // Implies
  Formula rhs() const { return Formula(node_->child2); }
  Var bound() const { return node_->v1; }                   // Forall binder

  friend bool operator==(const Formula& a, const Formula& b);
  friend bool operator!=(const Formula& a, const Formula& b) { return !(a == b); }
  // Structural order, usable as a map/set key.
  friend bool operator<(const Formula& a, const Formula& b);

 private:
  struct Node {
    Kind kind;
    uint32_t index = 0;
    Var v1{}, v2{};
    std::string pred;
    std::vector<Var> args;
    std::shared_ptr<const Node> child1, child2;
  };

  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

// Leaves (FmVar, Equals, Pred) have height 1; Not/Forall add 1; Implies is
// 1 + max of its sides.
uint32_t height(const Formula& f);

// The set of metavariables occurring in a formula. Object variables do not
// contribute.
MvSet occurring(const Formula& f);
void collect_occurring(const Formula& f, MvSet& out);

// Object variables occurring (free or bound).
std::set<uint32_t> object_vars(const Formula& f);
// Free object variables, with the usual binding convention for Forall.
std::set<uint32_t> free_object_vars(const Formula& f);

bool has_formula_mv(const Formula& f);
bool has_predicate(const Formula& f);
bool has_quantifier(const Formula& f);
bool is_object_formula(const Formula& f);   // no metavariables at all
bool is_meta_formula(const Formula& f);     // no object variables

// Quantifier nesting depth.
uint32_t quantifier_depth(const Formula& f);

// Concrete syntax. Tokens: xN / fN / vN / "=" / "->" / "-." / "A." /
// predicate names / parentheses; implications fully parenthesized, "-." and
// "A. xN" prefix.
std::string render(const Formula& f);

struct ParseError : std::runtime_error {
  ParseError(const std::string& msg, size_t token_pos)
      : std::runtime_error(msg), position(token_pos) {}
  size_t position;  // index of the offending token
};

Formula parse_formula(const std::string& text, const Language& lang = {});
Formula parse_formula(const std::vector<std::string>& tokens, size_t& pos, const Language& lang);

std::vector<std::string> tokenize(const std::string& text);

}  // namespace schemata
