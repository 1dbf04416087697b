#include "schemata/microkernel.hpp"

#include <algorithm>
#include <sstream>

namespace schemata::mm {

const Assertion* MMDatabase::find(const std::string& label) const {
  auto it = assertion_index.find(label);
  return it == assertion_index.end() ? nullptr : &assertions[it->second];
}

namespace {

struct Token {
  std::string text;
  size_t line;
};

std::vector<Token> lex(const std::string& text) {
  std::vector<Token> out;
  size_t line = 1;
  std::string cur;
  auto flush = [&] {
    if (!cur.empty()) {
      out.push_back({cur, line});
      cur.clear();
    }
  };
  for (char ch : text) {
    if (ch == '\n') {
      flush();
      ++line;
    } else if (std::isspace(static_cast<unsigned char>(ch))) {
      flush();
    } else {
      cur += ch;
    }
  }
  flush();
  return out;
}

struct Frame {
  std::vector<std::string> hyp_labels;  // active $f and $e in order of appearance
  std::set<std::pair<std::string, std::string>> disjoint;
};

struct Parser {
  const std::vector<Token>& toks;
  size_t pos = 0;
  MMDatabase db;
  std::vector<Frame> frames{Frame{}};
  std::set<std::string> labels_seen;

  bool done() const { return pos >= toks.size(); }
  const Token& peek() const { return toks[pos]; }
  Token next() {
    if (done()) throw MMError("unexpected end of file", toks.empty() ? 0 : toks.back().line);
    return toks[pos++];
  }

  void skip_comment(size_t at_line) {
    while (true) {
      if (done()) throw MMError("unterminated comment", at_line);
      Token t = next();
      if (t.text == "$)") return;
      if (t.text == "$(") throw MMError("comments do not nest", t.line);
    }
  }

  Expression read_statement(const std::string& terminator, size_t at_line) {
    Expression e;
    while (true) {
      if (done()) throw MMError("unterminated statement", at_line);
      Token t = next();
      if (t.text == terminator) return e;
      if (t.text == "$(") {
        skip_comment(t.line);
        continue;
      }
      if (t.text.size() >= 2 && t.text[0] == '$' && t.text != "?")
        throw MMError("unexpected keyword " + t.text + " inside statement", t.line);
      e.push_back(t.text);
    }
  }

  void check_symbols(const Expression& e, size_t at_line, bool allow_query = false) {
    for (const std::string& s : e) {
      if (s == "?" && allow_query) continue;
      if (!db.constants.count(s) && !db.variables.count(s))
        throw MMError("symbol " + s + " not declared", at_line);
    }
  }

  std::vector<std::string> active_hypotheses() const {
    std::vector<std::string> out;
    for (const Frame& f : frames) out.insert(out.end(), f.hyp_labels.begin(), f.hyp_labels.end());
    return out;
  }

  std::set<std::pair<std::string, std::string>> active_disjoint() const {
    std::set<std::pair<std::string, std::string>> out;
    for (const Frame& f : frames) out.insert(f.disjoint.begin(), f.disjoint.end());
    return out;
  }

  std::optional<std::string> floating_for(const std::string& var) const {
    for (const std::string& l : active_hypotheses()) {
      const Hypothesis& h = db.hypotheses.at(l);
      if (h.floating && h.statement.size() == 2 && h.statement[1] == var) return l;
    }
    return std::nullopt;
  }

  // mandatory hypotheses of an assertion: every active $e, plus the active
  // $f of each variable occurring in the statement or in an active $e,
  // in order of appearance
  std::vector<std::string> mandatory_for(const Expression& stmt, size_t at_line) {
    std::set<std::string> vars;
    auto collect = [&](const Expression& e) {
      for (const std::string& s : e)
        if (db.variables.count(s)) vars.insert(s);
    };
    collect(stmt);
    for (const std::string& l : active_hypotheses()) {
      const Hypothesis& h = db.hypotheses.at(l);
      if (!h.floating) collect(h.statement);
    }
    std::vector<std::string> out;
    std::set<std::string> covered;
    for (const std::string& l : active_hypotheses()) {
      const Hypothesis& h = db.hypotheses.at(l);
      if (h.floating) {
        const std::string& v = h.statement[1];
        if (vars.count(v)) {
          if (covered.count(v)) throw MMError("variable " + v + " has two active $f", at_line);
          covered.insert(v);
          out.push_back(l);
        }
      } else {
        out.push_back(l);
      }
    }
    for (const std::string& v : vars)
      if (!covered.count(v)) throw MMError("variable " + v + " has no active $f", at_line);
    return out;
  }

  void new_label(const std::string& l, size_t at_line) {
    if (l.find('$') != std::string::npos) throw MMError("bad label " + l, at_line);
    if (!labels_seen.insert(l).second) throw MMError("duplicate label " + l, at_line);
  }

  void run() {
    while (!done()) {
      Token t = next();
      if (t.text == "$(") {
        skip_comment(t.line);
      } else if (t.text == "${") {
        frames.push_back(Frame{});
      } else if (t.text == "$}") {
        if (frames.size() <= 1) throw MMError("unmatched $}", t.line);
        frames.pop_back();
      } else if (t.text == "$c") {
        Expression e = read_statement("$.", t.line);
        for (const std::string& s : e) {
          if (db.constants.count(s) || db.variables.count(s))
            throw MMError("symbol " + s + " redeclared", t.line);
          db.constants.insert(s);
        }
      } else if (t.text == "$v") {
        Expression e = read_statement("$.", t.line);
        for (const std::string& s : e) {
          if (db.constants.count(s) || db.variables.count(s))
            throw MMError("symbol " + s + " redeclared", t.line);
          db.variables.insert(s);
        }
      } else if (t.text == "$d") {
        Expression e = read_statement("$.", t.line);
        for (const std::string& s : e)
          if (!db.variables.count(s)) throw MMError("$d needs variables, got " + s, t.line);
        for (size_t a = 0; a < e.size(); ++a)
          for (size_t b = a + 1; b < e.size(); ++b) {
            if (e[a] == e[b]) throw MMError("$d repeats variable " + e[a], t.line);
            frames.back().disjoint.insert({std::min(e[a], e[b]), std::max(e[a], e[b])});
          }
      } else if (t.text.size() >= 1 && t.text[0] == '$') {
        throw MMError("unsupported token " + t.text, t.line);
      } else {
        // labelled statement
        const std::string label = t.text;
        Token kw = next();
        if (kw.text == "$f") {
          new_label(label, t.line);
          Expression e = read_statement("$.", t.line);
          if (e.size() != 2 || !db.constants.count(e[0]) || !db.variables.count(e[1]))
            throw MMError("$f needs one constant and one variable", t.line);
          db.hypotheses[label] = Hypothesis{label, e, true};
          frames.back().hyp_labels.push_back(label);
        } else if (kw.text == "$e") {
          new_label(label, t.line);
          Expression e = read_statement("$.", t.line);
          if (e.empty() || !db.constants.count(e[0]))
            throw MMError("$e must start with a constant", t.line);
          check_symbols(e, t.line);
          db.hypotheses[label] = Hypothesis{label, e, false};
          frames.back().hyp_labels.push_back(label);
        } else if (kw.text == "$a" || kw.text == "$p") {
          new_label(label, t.line);
          Assertion a;
          a.label = label;
          a.provable = kw.text == "$p";
          if (a.provable) {
            a.statement = read_statement("$=", t.line);
            a.proof = read_statement("$.", t.line);
            if (a.proof.empty()) throw MMError("empty proof", t.line);
          } else {
            a.statement = read_statement("$.", t.line);
          }
          if (a.statement.empty() || !db.constants.count(a.statement[0]))
            throw MMError("assertion must start with a constant", t.line);
          check_symbols(a.statement, t.line);
          a.mandatory = mandatory_for(a.statement, t.line);
          a.disjoint = active_disjoint();
          db.assertion_index[label] = db.assertions.size();
          db.assertions.push_back(std::move(a));
        } else {
          throw MMError("expected a keyword after label " + label, kw.line);
        }
      }
    }
    if (frames.size() != 1) throw MMError("unclosed ${", toks.empty() ? 0 : toks.back().line);
  }
};

using SubstMap = std::map<std::string, Expression>;

Expression apply_mm_subst(const Expression& e, const SubstMap& sub, const MMDatabase& db) {
  Expression out;
  for (const std::string& s : e) {
    auto it = sub.find(s);
    if (it != sub.end() && db.variables.count(s))
      out.insert(out.end(), it->second.begin(), it->second.end());
    else
      out.push_back(s);
  }
  return out;
}

std::set<std::string> vars_of(const Expression& e, const MMDatabase& db) {
  std::set<std::string> out;
  for (const std::string& s : e)
    if (db.variables.count(s)) out.insert(s);
  return out;
}

ProofResult verify_one(const MMDatabase& db, const Assertion& target) {
  ProofResult res;
  res.label = target.label;

  for (const std::string& step : target.proof)
    if (step == "?") {
      res.status = ProofStatus::Incomplete;
      res.detail = "proof contains ?";
      return res;
    }

  std::vector<Expression> stack;
  auto fail = [&res](const std::string& why) {
    res.status = ProofStatus::Error;
    res.detail = why;
    return res;
  };

  for (const std::string& step : target.proof) {
    auto hit = db.hypotheses.find(step);
    if (hit != db.hypotheses.end()) {
      // must be a mandatory hypothesis of the target
      if (std::find(target.mandatory.begin(), target.mandatory.end(), step) ==
          target.mandatory.end())
        return fail("hypothesis " + step + " is not mandatory here");
      stack.push_back(hit->second.statement);
      continue;
    }
    const Assertion* a = db.find(step);
    if (!a) return fail("unknown label " + step);
    if (db.assertion_index.at(step) >= db.assertion_index.at(target.label))
      return fail("label " + step + " not yet available");

    if (stack.size() < a->mandatory.size()) return fail("StackUnderflow at " + step);
    size_t base = stack.size() - a->mandatory.size();

    // unify floating hypotheses, then check essentials
    SubstMap sub;
    for (size_t k = 0; k < a->mandatory.size(); ++k) {
      const Hypothesis& h = db.hypotheses.at(a->mandatory[k]);
      const Expression& got = stack[base + k];
      if (h.floating) {
        if (got.empty() || got[0] != h.statement[0])
          return fail("SubstitutionMismatch: typecode of " + h.label);
        sub[h.statement[1]] = Expression(got.begin() + 1, got.end());
      }
    }
    for (size_t k = 0; k < a->mandatory.size(); ++k) {
      const Hypothesis& h = db.hypotheses.at(a->mandatory[k]);
      if (h.floating) continue;
      Expression want = apply_mm_subst(h.statement, sub, db);
      if (want != stack[base + k])
        return fail("SubstitutionMismatch: essential " + h.label);
    }

    // disjointness: for each $d pair of the cited assertion, substituted
    // variable sets must be disjoint and pairwise $d in the target's frame
    for (const auto& [x, y] : a->disjoint) {
      auto ix = sub.find(x);
      auto iy = sub.find(y);
      if (ix == sub.end() || iy == sub.end()) continue;
      std::set<std::string> vx = vars_of(ix->second, db);
      std::set<std::string> vy = vars_of(iy->second, db);
      for (const std::string& va : vx)
        for (const std::string& vb : vy) {
          if (va == vb) return fail("DisjointViolation: " + va + " on both sides");
          if (!target.disjoint.count({std::min(va, vb), std::max(va, vb)}))
            return fail("DisjointViolation: {" + va + "," + vb + "} not declared");
        }
    }

    stack.resize(base);
    stack.push_back(apply_mm_subst(a->statement, sub, db));
  }

  if (stack.size() != 1) return fail("FinalStackNotSingleton");
  if (stack[0] != target.statement) return fail("WrongConclusion");
  res.status = ProofStatus::Verified;
  return res;
}

}  // namespace

MMDatabase mm_parse(const std::string& text) {
  auto toks = lex(text);
  Parser p{toks};
  p.run();
  return std::move(p.db);
}

std::vector<ProofResult> mm_verify(const MMDatabase& db) {
  std::vector<ProofResult> out;
  for (const Assertion& a : db.assertions)
    if (a.provable) out.push_back(verify_one(db, a));
  return out;
}

std::set<Expression> mm_derivable(const MMDatabase& db, uint32_t depth) {
  // leaves: $a with no essential hypotheses (floating hypotheses satisfied by
  // earlier derivations or, at depth 0, by the variable itself via its $f)
  std::set<Expression> known;
  for (const auto& [label, h] : db.hypotheses)
    if (h.floating) known.insert(h.statement);

  for (uint32_t round = 0; round < depth; ++round) {
    std::set<Expression> next = known;
    for (const Assertion& a : db.assertions) {
      if (a.provable) continue;
      // enumerate substitutions: each mandatory floating hypothesis ranges
      // over known expressions with the right typecode
      std::vector<const Hypothesis*> floats, essentials;
      for (const std::string& l : a.mandatory) {
        const Hypothesis& h = db.hypotheses.at(l);
        (h.floating ? floats : essentials).push_back(&h);
      }
      std::vector<std::vector<Expression>> candidates;
      for (const Hypothesis* h : floats) {
        std::vector<Expression> c;
        for (const Expression& e : known)
          if (!e.empty() && e[0] == h->statement[0]) c.emplace_back(e.begin() + 1, e.end());
        candidates.push_back(std::move(c));
      }
      std::vector<size_t> idx(floats.size(), 0);
      while (true) {
        SubstMap sub;
        bool viable = true;
        for (size_t k = 0; k < floats.size(); ++k) {
          if (candidates[k].empty()) {
            viable = false;
            break;
          }
          sub[floats[k]->statement[1]] = candidates[k][idx[k]];
        }
        if (!viable) break;
        bool ok = true;
        for (const Hypothesis* h : essentials)
          ok = ok && known.count(apply_mm_subst(h->statement, sub, db)) > 0;
        if (ok) next.insert(apply_mm_subst(a.statement, sub, db));

        size_t k = 0;
        for (; k < floats.size(); ++k) {
          if (++idx[k] < candidates[k].size()) break;
          idx[k] = 0;
        }
        if (k == floats.size()) break;
      }
    }
    if (next == known) break;
    known = std::move(next);
  }
  return known;
}

}  // namespace schemata::mm
