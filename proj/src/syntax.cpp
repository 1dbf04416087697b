#include "schemata/syntax.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace schemata {

std::string to_string(Var v) {
  return (v.kind == VarKind::Meta ? "x" : "v") + std::to_string(v.index);
}

std::string to_string(Metavariable m) {
  return (m.kind == MvKind::Variable ? "x" : "f") + std::to_string(m.index);
}

Language::Language(std::initializer_list<std::pair<std::string, uint32_t>> preds) {
  for (const auto& [name, arity] : preds) add_predicate(name, arity);
}

void Language::add_predicate(const std::string& name, uint32_t ar) {
  if (arity(name)) throw std::invalid_argument("duplicate predicate: " + name);
  preds_.emplace_back(name, ar);
}

std::optional<uint32_t> Language::arity(const std::string& name) const {
  for (const auto& [n, a] : preds_)
    if (n == name) return a;
  return std::nullopt;
}

Formula Formula::fm(uint32_t index) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::FmVar;
  n->index = index;
  return Formula(std::move(n));
}

Formula Formula::equals(Var a, Var b) {
  if (a.kind != b.kind) throw std::invalid_argument("mixed-level equality atom");
  auto n = std::make_shared<Node>();
  n->kind = Kind::Equals;
  n->v1 = a;
  n->v2 = b;
  return Formula(std::move(n));
}

Formula Formula::pred(std::string name, std::vector<Var> args) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Pred;
  n->pred = std::move(name);
  n->args = std::move(args);
  return Formula(std::move(n));
}

Formula Formula::negation(Formula f) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Not;
  n->child1 = f.node_;
  return Formula(std::move(n));
}

Formula Formula::implies(Formula lhs, Formula rhs) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Implies;
  n->child1 = lhs.node_;
  n->child2 = rhs.node_;
  return Formula(std::move(n));
}

Formula Formula::forall(Var bound, Formula body) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Forall;
  n->v1 = bound;
  n->child1 = body.node_;
  return Formula(std::move(n));
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (!a.node_ || !b.node_) return false;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Formula::Kind::FmVar: return a.fm_index() == b.fm_index();
    case Formula::Kind::Equals: return a.eq_lhs() == b.eq_lhs() && a.eq_rhs() == b.eq_rhs();
    case Formula::Kind::Pred: return a.pred_name() == b.pred_name() && a.pred_args() == b.pred_args();
    case Formula::Kind::Not: return a.child() == b.child();
    case Formula::Kind::Implies: return a.lhs() == b.lhs() && a.rhs() == b.rhs();
    case Formula::Kind::Forall: return a.bound() == b.bound() && a.child() == b.child();
  }
  return false;
}

bool operator<(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return false;
  if (!a.node_) return b.node_ != nullptr;
  if (!b.node_) return false;
  if (a.kind() != b.kind()) return a.kind() < b.kind();
  switch (a.kind()) {
    case Formula::Kind::FmVar: return a.fm_index() < b.fm_index();
    case Formula::Kind::Equals:
      if (a.eq_lhs() != b.eq_lhs()) return a.eq_lhs() < b.eq_lhs();
      return a.eq_rhs() < b.eq_rhs();
    case Formula::Kind::Pred:
      if (a.pred_name() != b.pred_name()) return a.pred_name() < b.pred_name();
      return a.pred_args() < b.pred_args();
    case Formula::Kind::Not: return a.child() < b.child();
    case Formula::Kind::Implies:
      if (a.lhs() != b.lhs()) return a.lhs() < b.lhs();
      return a.rhs() < b.rhs();
    case Formula::Kind::Forall:
      if (a.bound() != b.bound()) return a.bound() < b.bound();
      return a.child() < b.child();
  }
  return false;
}

uint32_t height(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::FmVar:
    case Formula::Kind::Equals:
    case Formula::Kind::Pred: return 1;
    case Formula::Kind::Not:
    case Formula::Kind::Forall: return 1 + height(f.child());
    case Formula::Kind::Implies: return 1 + std::max(height(f.lhs()), height(f.rhs()));
  }
  return 0;
}

static void add_var(Var v, MvSet& out) {
  if (v.kind == VarKind::Meta) out.insert(var_mv(v.index));
}

void collect_occurring(const Formula& f, MvSet& out) {
  switch (f.kind()) {
    case Formula::Kind::FmVar: out.insert(fm_mv(f.fm_index())); return;
    case Formula::Kind::Equals:
      add_var(f.eq_lhs(), out);
      add_var(f.eq_rhs(), out);
      return;
    case Formula::Kind::Pred:
      for (Var v : f.pred_args()) add_var(v, out);
      return;
    case Formula::Kind::Not: collect_occurring(f.child(), out); return;
    case Formula::Kind::Implies:
      collect_occurring(f.lhs(), out);
      collect_occurring(f.rhs(), out);
      return;
    case Formula::Kind::Forall:
      add_var(f.bound(), out);
      collect_occurring(f.child(), out);
      return;
  }
}

MvSet occurring(const Formula& f) {
  MvSet out;
  collect_occurring(f, out);
  return out;
}

static void collect_object_vars(const Formula& f, std::set<uint32_t>& out) {
  auto add = [&out](Var v) { if (v.kind == VarKind::Object) out.insert(v.index); };
  switch (f.kind()) {
    case Formula::Kind::FmVar: return;
    case Formula::Kind::Equals: add(f.eq_lhs()); add(f.eq_rhs()); return;
    case Formula::Kind::Pred:
      for (Var v : f.pred_args()) add(v);
      return;
    case Formula::Kind::Not: collect_object_vars(f.child(), out); return;
    case Formula::Kind::Implies:
      collect_object_vars(f.lhs(), out);
      collect_object_vars(f.rhs(), out);
      return;
    case Formula::Kind::Forall:
      add(f.bound());
      collect_object_vars(f.child(), out);
      return;
  }
}

std::set<uint32_t> object_vars(const Formula& f) {
  std::set<uint32_t> out;
  collect_object_vars(f, out);
  return out;
}

static void collect_free(const Formula& f, std::set<uint32_t>& bound, std::set<uint32_t>& out) {
  auto add = [&](Var v) {
    if (v.kind == VarKind::Object && !bound.count(v.index)) out.insert(v.index);
  };
  switch (f.kind()) {
    case Formula::Kind::FmVar: return;
    case Formula::Kind::Equals: add(f.eq_lhs()); add(f.eq_rhs()); return;
    case Formula::Kind::Pred:
      for (Var v : f.pred_args()) add(v);
      return;
    case Formula::Kind::Not: collect_free(f.child(), bound, out); return;
    case Formula::Kind::Implies:
      collect_free(f.lhs(), bound, out);
      collect_free(f.rhs(), bound, out);
      return;
    case Formula::Kind::Forall: {
      Var b = f.bound();
      bool was = b.kind == VarKind::Object && bound.count(b.index);
      if (b.kind == VarKind::Object) bound.insert(b.index);
      collect_free(f.child(), bound, out);
      if (b.kind == VarKind::Object && !was) bound.erase(b.index);
      return;
    }
  }
}

std::set<uint32_t> free_object_vars(const Formula& f) {
  std::set<uint32_t> bound, out;
  collect_free(f, bound, out);
  return out;
}

bool has_formula_mv(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::FmVar: return true;
    case Formula::Kind::Equals:
    case Formula::Kind::Pred: return false;
    case Formula::Kind::Not:
    case Formula::Kind::Forall: return has_formula_mv(f.child());
    case Formula::Kind::Implies: return has_formula_mv(f.lhs()) || has_formula_mv(f.rhs());
  }
  return false;
}

bool has_predicate(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::FmVar:
    case Formula::Kind::Equals: return false;
    case Formula::Kind::Pred: return true;
    case Formula::Kind::Not:
    case Formula::Kind::Forall: return has_predicate(f.child());
    case Formula::Kind::Implies: return has_predicate(f.lhs()) || has_predicate(f.rhs());
  }
  return false;
}

bool has_quantifier(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::FmVar:
    case Formula::Kind::Equals:
    case Formula::Kind::Pred: return false;
    case Formula::Kind::Not: return has_quantifier(f.child());
    case Formula::Kind::Forall: return true;
    case Formula::Kind::Implies: return has_quantifier(f.lhs()) || has_quantifier(f.rhs());
  }
  return false;
}

static bool vars_all(const Formula& f, VarKind k, bool fmv_ok) {
  auto ok = [k](Var v) { return v.kind == k; };
  switch (f.kind()) {
    case Formula::Kind::FmVar: return fmv_ok;
    case Formula::Kind::Equals: return ok(f.eq_lhs()) && ok(f.eq_rhs());
    case Formula::Kind::Pred:
      return std::all_of(f.pred_args().begin(), f.pred_args().end(), ok);
    case Formula::Kind::Not: return vars_all(f.child(), k, fmv_ok);
    case Formula::Kind::Implies:
      return vars_all(f.lhs(), k, fmv_ok) && vars_all(f.rhs(), k, fmv_ok);
    case Formula::Kind::Forall: return ok(f.bound()) && vars_all(f.child(), k, fmv_ok);
  }
  return false;
}

bool is_object_formula(const Formula& f) { return vars_all(f, VarKind::Object, false); }
bool is_meta_formula(const Formula& f) { return vars_all(f, VarKind::Meta, true); }

uint32_t quantifier_depth(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::FmVar:
    case Formula::Kind::Equals:
    case Formula::Kind::Pred: return 0;
    case Formula::Kind::Not: return quantifier_depth(f.child());
    case Formula::Kind::Implies:
      return std::max(quantifier_depth(f.lhs()), quantifier_depth(f.rhs()));
    case Formula::Kind::Forall: return 1 + quantifier_depth(f.child());
  }
  return 0;
}

std::string render(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::FmVar: return "f" + std::to_string(f.fm_index());
    case Formula::Kind::Equals:
      return to_string(f.eq_lhs()) + " = " + to_string(f.eq_rhs());
    case Formula::Kind::Pred: {
      std::string s = f.pred_name();
      for (Var v : f.pred_args()) s += " " + to_string(v);
      return s;
    }
    case Formula::Kind::Not: return "-. " + render(f.child());
    case Formula::Kind::Implies:
      return "( " + render(f.lhs()) + " -> " + render(f.rhs()) + " )";
    case Formula::Kind::Forall:
      return "A. " + to_string(f.bound()) + " " + render(f.child());
  }
  return "";
}

std::vector<std::string> tokenize(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream is(text);
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

namespace {

bool numeric_suffix(const std::string& t, char head, uint32_t& idx) {
  if (t.size() < 2 || t[0] != head) return false;
  for (size_t i = 1; i < t.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
  idx = static_cast<uint32_t>(std::stoul(t.substr(1)));
  return true;
}

std::optional<Var> as_var(const std::string& t) {
  uint32_t i;
  if (numeric_suffix(t, 'x', i)) return meta_var(i);
  if (numeric_suffix(t, 'v', i)) return object_var(i);
  return std::nullopt;
}

}  // namespace

Formula parse_formula(const std::vector<std::string>& tokens, size_t& pos, const Language& lang) {
  if (pos >= tokens.size()) throw ParseError("unexpected end of formula", pos);
  const std::string& t = tokens[pos];

  if (t == "-.") {
    ++pos;
    return Formula::negation(parse_formula(tokens, pos, lang));
  }
  if (t == "A.") {
    ++pos;
    if (pos >= tokens.size()) throw ParseError("'A.' needs a variable", pos);
    auto v = as_var(tokens[pos]);
    if (!v) throw ParseError("'A.' needs a variable, got '" + tokens[pos] + "'", pos);
    ++pos;
    return Formula::forall(*v, parse_formula(tokens, pos, lang));
  }
  if (t == "(") {
    ++pos;
    Formula lhs = parse_formula(tokens, pos, lang);
    if (pos >= tokens.size() || tokens[pos] != "->")
      throw ParseError("expected '->'", pos);
    ++pos;
    Formula rhs = parse_formula(tokens, pos, lang);
    if (pos >= tokens.size() || tokens[pos] != ")")
      throw ParseError("expected ')'", pos);
    ++pos;
    return Formula::implies(std::move(lhs), std::move(rhs));
  }

  uint32_t idx;
  if (numeric_suffix(t, 'f', idx)) {
    ++pos;
    return Formula::fm(idx);
  }
  if (auto v = as_var(t)) {
    // either an equality atom "V = V" or a lone variable (an error)
    if (pos + 1 < tokens.size() && tokens[pos + 1] == "=") {
      auto w = (pos + 2 < tokens.size()) ? as_var(tokens[pos + 2]) : std::nullopt;
      if (!w) throw ParseError("expected a variable after '='", pos + 2);
      if (v->kind != w->kind) throw ParseError("cannot equate " + t + " and " + tokens[pos + 2], pos + 2);
      pos += 3;
      return Formula::equals(*v, *w);
    }
    throw ParseError("lone variable '" + t + "' is not a formula", pos);
  }
  if (auto ar = lang.arity(t)) {
    ++pos;
    std::vector<Var> args;
    for (uint32_t i = 0; i < *ar; ++i) {
      if (pos >= tokens.size())
        throw ParseError("predicate '" + t + "' expects " + std::to_string(*ar) + " arguments", pos);
      auto v = as_var(tokens[pos]);
      if (!v) throw ParseError("arity mismatch for '" + t + "': bad argument '" + tokens[pos] + "'", pos);
      if (!args.empty() && args.front().kind != v->kind)
        throw ParseError("mixed-level arguments to '" + t + "'", pos);
      args.push_back(*v);
      ++pos;
    }
    // catch "P x0 x1" with P unary: a stray variable token follows
    if (pos < tokens.size() && as_var(tokens[pos]) && !(pos + 1 < tokens.size() && tokens[pos + 1] == "="))
      throw ParseError("arity mismatch for '" + t + "': too many arguments", pos);
    return Formula::pred(t, std::move(args));
  }
  throw ParseError("unknown token '" + t + "'", pos);
}

Formula parse_formula(const std::string& text, const Language& lang) {
  auto tokens = tokenize(text);
  size_t pos = 0;
  Formula f = parse_formula(tokens, pos, lang);
  if (pos != tokens.size()) throw ParseError("trailing tokens after formula", pos);
  return f;
}

}  // namespace schemata
