#include "schemata/script.hpp"

#include <fstream>
#include <sstream>

namespace schemata {

namespace {

struct Tok {
  std::string text;
  size_t line;
};

std::vector<Tok> lex(const std::string& text) {
  std::vector<Tok> out;
  size_t line = 1;
  std::string cur;
  auto flush = [&] {
    if (!cur.empty()) {
      out.push_back({cur, line});
      cur.clear();
    }
  };
  for (size_t k = 0; k < text.size(); ++k) {
    char ch = text[k];
    if (ch == '#') {  // comment to end of line
      flush();
      while (k < text.size() && text[k] != '\n') ++k;
      ++line;
      continue;
    }
    if (ch == '\n') {
      flush();
      ++line;
    } else if (std::isspace(static_cast<unsigned char>(ch))) {
      flush();
    } else if (ch == '{' || ch == '}' || ch == ';' || ch == ',' || ch == '(' || ch == ')' ||
               ch == '[' || ch == ']') {
      // punctuation separates, except that ( ) [ ] also appear inside
      // formulas; formulas are re-lexed from raw tokens, so keep them split
      flush();
      out.push_back({std::string(1, ch), line});
    } else {
      cur += ch;
    }
  }
  flush();
  return out;
}

struct Parser {
  std::vector<Tok> toks;
  size_t pos = 0;
  ScriptFile out;

  bool done() const { return pos >= toks.size(); }
  const Tok& peek() const {
    if (done()) throw ScriptError("unexpected end of file", toks.empty() ? 0 : toks.back().line);
    return toks[pos];
  }
  Tok next() {
    const Tok& t = peek();
    ++pos;
    return t;
  }
  void expect(const std::string& s) {
    Tok t = next();
    if (t.text != s) throw ScriptError("expected '" + s + "', got '" + t.text + "'", t.line);
  }
  bool accept(const std::string& s) {
    if (!done() && peek().text == s) {
      ++pos;
      return true;
    }
    return false;
  }

  uint32_t number() {
    Tok t = next();
    for (char c : t.text)
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw ScriptError("expected a number, got '" + t.text + "'", t.line);
    return static_cast<uint32_t>(std::stoul(t.text));
  }

  // formula tokens run to the next ';' or '}' at depth 0 of the block
  Formula formula(const std::vector<std::string>& stop) {
    std::vector<std::string> raw;
    size_t at = peek().line;
    int depth = 0;
    while (!done()) {
      const std::string& s = peek().text;
      if (depth == 0 &&
          std::find(stop.begin(), stop.end(), s) != stop.end())
        break;
      if (s == "(") ++depth;
      if (s == ")") --depth;
      raw.push_back(next().text);
    }
    size_t p = 0;
    try {
      Formula f = parse_formula(raw, p, out.language);
      if (p != raw.size()) throw ParseError("trailing tokens", p);
      return f;
    } catch (const ParseError& e) {
      throw ScriptError(std::string("formula: ") + e.what(), at);
    }
  }

  Metavariable metavariable() {
    Tok t = next();
    if (t.text.size() >= 2 && (t.text[0] == 'x' || t.text[0] == 'f')) {
      bool digits = true;
      for (size_t k = 1; k < t.text.size(); ++k)
        digits = digits && std::isdigit(static_cast<unsigned char>(t.text[k]));
      if (digits) {
        uint32_t idx = static_cast<uint32_t>(std::stoul(t.text.substr(1)));
        return t.text[0] == 'x' ? var_mv(idx) : fm_mv(idx);
      }
    }
    throw ScriptError("expected a metavariable, got '" + t.text + "'", t.line);
  }

  // ( f0 := FMLA ; x0 := x1 ; x2 := v0 )
  Substitution substitution() {
    Substitution s;
    expect("(");
    if (accept(")")) return s;
    while (true) {
      Tok t = peek();
      Metavariable m = metavariable();
      expect(":=");
      if (m.kind == MvKind::Formula) {
        s.set_fm(m.index, formula({";", ")"}));
      } else {
        Tok img = next();
        uint32_t idx;
        if (img.text.size() >= 2 && (img.text[0] == 'x' || img.text[0] == 'v')) {
          idx = static_cast<uint32_t>(std::stoul(img.text.substr(1)));
          s.set_var(m.index, img.text[0] == 'x' ? meta_var(idx) : object_var(idx));
        } else {
          throw ScriptError("expected a variable image, got '" + img.text + "'", img.line);
        }
      }
      if (accept(")")) break;
      expect(";");
      if (accept(")")) break;
      (void)t;
    }
    return s;
  }

  void language_block() {
    expect("{");
    while (!accept("}")) {
      Tok name = next();
      uint32_t ar = number();
      try {
        out.language.add_predicate(name.text, ar);
      } catch (const std::invalid_argument& e) {
        throw ScriptError(e.what(), name.line);
      }
      accept(";");
    }
  }

  Scheme scheme_body() {
    expect("{");
    std::vector<Formula> hyps;
    std::vector<std::string> hyp_names;
    std::optional<Formula> concl;
    DvSet dv;
    while (!accept("}")) {
      Tok key = next();
      if (key.text == "dv:") {
        std::vector<Metavariable> ms;
        while (peek().text != ";" && peek().text != "}") ms.push_back(metavariable());
        accept(";");
        for (size_t a = 0; a < ms.size(); ++a)
          for (size_t b = a + 1; b < ms.size(); ++b) dv.insert(ms[a], ms[b]);
      } else if (key.text == "hyp") {
        Tok name = next();
        std::string n = name.text;
        if (!n.empty() && n.back() == ':') n.pop_back();
        else expect(":");
        hyp_names.push_back(n);
        hyps.push_back(formula({";", "}"}));
        accept(";");
      } else if (key.text == "concl:") {
        concl = formula({";", "}"});
        accept(";");
      } else {
        throw ScriptError("unexpected '" + key.text + "' in scheme block", key.line);
      }
    }
    if (!concl) throw ScriptError("scheme has no conclusion", toks[pos - 1].line);
    Scheme s(std::move(hyps), std::move(*concl), std::move(dv));
    last_hyp_names = hyp_names;
    return s;
  }

  std::vector<std::string> last_hyp_names;

  void scheme_block() {
    Tok name = next();
    if (out.lookup(name.text))
      throw ScriptError("scheme '" + name.text + "' already declared", name.line);
    out.schemes.emplace_back(name.text, scheme_body());
  }

  void proof_block() {
    ProofBlock pb;
    Tok name = next();
    pb.proof.name = name.text;
    expect("of");
    Tok target = next();
    auto sch = out.lookup(target.text);
    if (!sch) throw ScriptError("unknown scheme '" + target.text + "'", target.line);
    pb.proof.target = *sch;
    // hypothesis names for script-declared schemes
    for (const auto& [n, s] : out.schemes)
      if (n == target.text) pb.proof.hyp_names = scheme_hyp_names[n];
    expect("from");
    while (peek().text != "{") {
      pb.axiom_sources.push_back(next().text);
      accept(",");
    }
    expect("{");
    size_t expected = 1;
    while (!accept("}")) {
      Tok num = next();  // "K:"
      std::string label = num.text;
      if (label.empty() || label.back() != ':')
        throw ScriptError("expected a line number like '1:', got '" + label + "'", num.line);
      size_t ln = std::stoul(label.substr(0, label.size() - 1));
      if (ln != expected)
        throw ScriptError("line numbered " + std::to_string(ln) + ", expected " +
                              std::to_string(expected),
                          num.line);
      ++expected;
      Formula stmt = formula({"hyp", "by"});
      Tok kind = next();
      if (kind.text == "hyp") {
        Tok hn = next();
        pb.proof.lines.push_back(ProofLine::hypothesis(std::move(stmt), hn.text));
      } else if (kind.text == "by") {
        Tok label_tok = next();
        Substitution s;
        if (peek().text == "(") s = substitution();
        std::vector<size_t> premises;
        if (accept("from")) {
          while (true) {
            premises.push_back(number() - 1);  // to 0-based
            if (!accept(",")) break;
          }
        }
        pb.proof.lines.push_back(
            ProofLine::by_axiom(std::move(stmt), label_tok.text, std::move(s), std::move(premises)));
      } else {
        throw ScriptError("expected 'hyp' or 'by', got '" + kind.text + "'", kind.line);
      }
    }
    out.proofs.push_back(std::move(pb));
  }

  std::map<std::string, std::vector<std::string>> scheme_hyp_names;

  ModelSpec model_block() {
    Tok kind = next();
    expect("{");
    if (kind.text == "tt") {
      TruthTableModel t;
      while (!accept("}")) {
        Tok key = next();
        if (key.text == "values") {
          t.value_count = number();
        } else if (key.text == "imp") {
          expect("[");
          t.imp_table.assign(t.value_count, {});
          for (uint32_t a = 0; a < t.value_count; ++a)
            for (uint32_t b = 0; b < t.value_count; ++b) t.imp_table[a].push_back(number());
          expect("]");
        } else if (key.text == "neg") {
          expect("[");
          for (uint32_t a = 0; a < t.value_count; ++a) t.neg_table.push_back(number());
          expect("]");
        } else if (key.text == "designated") {
          expect("{");
          while (!accept("}")) t.designated.insert(number());
        } else if (key.text == "eq") {
          Tok mode = next();
          if (mode.text == "const") {
            t.eq_rule = {EqRule::Kind::Constant, number(), 0};
          } else if (mode.text == "indexed") {
            uint32_t same = number(), diff = number();
            t.eq_rule = {EqRule::Kind::IdentityIndexed, same, diff};
          } else {
            throw ScriptError("eq mode is 'const' or 'indexed'", mode.line);
          }
        } else if (key.text == "pred") {
          Tok name = next();
          t.pred_rule[name.text] = number();
        } else if (key.text == "quant") {
          Tok mode = next();
          if (mode.text == "ignore") t.quantifier_rule = QuantifierRule::Ignore;
          else if (mode.text == "monk") t.quantifier_rule = QuantifierRule::MonkALLdistr;
          else throw ScriptError("quant mode is 'ignore' or 'monk'", mode.line);
        } else {
          throw ScriptError("unexpected '" + key.text + "' in tt model", key.line);
        }
        accept(";");
      }
      return t;
    }
    if (kind.text == "fo") {
      FirstOrderModel m;
      m.language = out.language;
      bool quant_set = false;
      while (!accept("}")) {
        Tok key = next();
        if (key.text == "size") {
          m.domain_size = number();
        } else if (key.text == "eq") {
          Tok mode = peek();
          if (mode.text == "total") {
            next();
            for (uint32_t a = 0; a < m.domain_size; ++a)
              for (uint32_t b = 0; b < m.domain_size; ++b) m.eq_graph.insert({a, b});
          } else if (mode.text == "identity") {
            next();
            for (uint32_t a = 0; a < m.domain_size; ++a) m.eq_graph.insert({a, a});
          } else if (mode.text == "empty") {
            next();
          } else {
            expect("{");
            while (!accept("}")) {
              uint32_t a = number(), b = number();
              m.eq_graph.insert({a, b});
              accept(";");
            }
          }
        } else if (key.text == "pred") {
          Tok name = next();
          auto ar = out.language.arity(name.text);
          if (!ar) throw ScriptError("unknown predicate " + name.text, name.line);
          expect("{");
          auto& table = m.predicate_tables[name.text];
          while (!accept("}")) {
            std::vector<uint32_t> tuple;
            for (uint32_t k = 0; k < *ar; ++k) tuple.push_back(number());
            table.insert(std::move(tuple));
            accept(";");
          }
        } else if (key.text == "quant") {
          expect("{");
          quant_set = true;
          while (!accept("}")) {
            m.quant_domain.push_back(number());
            accept(";");
          }
        } else {
          throw ScriptError("unexpected '" + key.text + "' in fo model", key.line);
        }
        accept(";");
      }
      if (!quant_set) m.default_quant_domain();
      return m;
    }
    if (kind.text == "kripke") {
      KripkeModel k;
      while (!accept("}")) {
        Tok key = next();
        if (key.text == "worlds") {
          k.worlds = number();
        } else if (key.text == "acc") {
          expect("{");
          while (!accept("}")) {
            uint32_t a = number(), b = number();
            k.access.insert({a, b});
            accept(";");
          }
        } else if (key.text == "pred") {
          Tok name = next();
          expect("{");
          while (!accept("}")) {
            k.pred_truth[name.text].insert(number());
            accept(";");
          }
        } else if (key.text == "eq") {
          Tok mode = next();
          k.equality_everywhere = mode.text == "everywhere";
        } else {
          throw ScriptError("unexpected '" + key.text + "' in kripke model", key.line);
        }
        accept(";");
      }
      return k;
    }
    if (kind.text == "nbhd") {
      NeighborhoodModel n;
      while (!accept("}")) {
        Tok key = next();
        if (key.text == "worlds") {
          n.worlds = number();
          n.neighborhoods.assign(n.worlds, {});
        } else if (key.text == "at") {
          uint32_t w = number();
          expect("{");
          while (!accept("}")) {
            expect("{");
            uint64_t mask = 0;
            while (!accept("}")) mask |= uint64_t{1} << number();
            if (w >= n.neighborhoods.size())
              throw ScriptError("world out of range in nbhd model", key.line);
            n.neighborhoods[w].push_back(mask);
            accept(";");
          }
        } else if (key.text == "pred") {
          Tok name = next();
          expect("{");
          uint64_t mask = 0;
          while (!accept("}")) mask |= uint64_t{1} << number();
          n.pred_truth[name.text] = mask;
        } else if (key.text == "eq") {
          Tok mode = next();
          n.equality_everywhere = mode.text == "everywhere";
        } else {
          throw ScriptError("unexpected '" + key.text + "' in nbhd model", key.line);
        }
        accept(";");
      }
      return n;
    }
    if (kind.text == "gen") {
      GenValuationModel g;
      while (!accept("}")) {
        Tok key = next();
        if (key.text == "height") g.height_bound = number();
        else throw ScriptError("unexpected '" + key.text + "' in gen model", key.line);
        accept(";");
      }
      return g;
    }
    if (kind.text == "star") {
      StarTruthModel s;
      s.base.language = out.language;
      while (!accept("}")) {
        Tok key = next();
        if (key.text == "size") {
          s.base.domain_size = number();
          s.base.eq_graph.clear();
          for (uint32_t a = 0; a < s.base.domain_size; ++a) s.base.eq_graph.insert({a, a});
        } else if (key.text == "anchor") {
          s.anchor = number();
        } else if (key.text == "var") {
          s.anchored_variable = number();
        } else if (key.text == "pred") {
          Tok name = next();
          auto ar = out.language.arity(name.text);
          if (!ar) throw ScriptError("unknown predicate " + name.text, name.line);
          expect("{");
          auto& table = s.base.predicate_tables[name.text];
          while (!accept("}")) {
            std::vector<uint32_t> tuple;
            for (uint32_t k = 0; k < *ar; ++k) tuple.push_back(number());
            table.insert(std::move(tuple));
            accept(";");
          }
        } else {
          throw ScriptError("unexpected '" + key.text + "' in star model", key.line);
        }
        accept(";");
      }
      s.base.default_quant_domain();
      return s;
    }
    if (kind.text == "heights") {
      while (!accept("}")) next();
      return HeightArgumentModel{};
    }
    throw ScriptError("unknown model kind '" + kind.text + "'", kind.line);
  }

  void cert_block() {
    IndependenceCertificate c;
    Tok name = next();
    c.name = name.text;
    c.language = out.language;
    expect("{");
    while (!accept("}")) {
      Tok key = next();
      if (key.text == "validate:") {
        while (peek().text != ";" && peek().text != "}") {
          c.validate_labels.push_back(next().text);
          accept(",");
        }
        accept(";");
      } else if (key.text == "falsify:") {
        if (peek().text == "{") {
          c.falsify_inline = scheme_body();
        } else {
          c.falsify_label = next().text;
        }
        accept(";");
      } else if (key.text == "model") {
        c.model = model_block();
        accept(";");
      } else if (key.text == "support") {
        c.surrogate_support = number();
        accept(";");
      } else if (key.text == "witness") {
        CertificateWitness w;
        expect("{");
        while (!accept("}")) {
          Tok wkey = peek();
          if (wkey.text == "assign") {
            next();
            Tok v = next();
            expect("=");
            uint32_t d = number();
            if (v.text.size() < 2 || v.text[0] != 'v')
              throw ScriptError("assign needs an object variable", v.line);
            w.assignment[static_cast<uint32_t>(std::stoul(v.text.substr(1)))] = d;
          } else if (wkey.text == "world") {
            next();
            w.world = number();
          } else {
            Metavariable m = metavariable();
            expect(":=");
            if (m.kind == MvKind::Formula) {
              w.fm_images[m.index] = formula({";", "}"});
            } else {
              Tok img = next();
              if (img.text.size() < 2 || img.text[0] != 'v')
                throw ScriptError("witness variable image must be an object variable", img.line);
              w.var_subst.set_var(m.index,
                                  object_var(static_cast<uint32_t>(std::stoul(img.text.substr(1)))));
            }
          }
          accept(";");
        }
        c.witness = std::move(w);
        accept(";");
      } else {
        throw ScriptError("unexpected '" + key.text + "' in cert block", key.line);
      }
    }
    out.certs.push_back(std::move(c));
  }

  void supercert_block() {
    SupercertBlock b;
    Tok name = next();
    b.cert.name = name.text;
    expect("{");
    while (!accept("}")) {
      Tok key = next();
      if (key.text == "target:") {
        if (peek().text == "{") {
          b.cert.target = scheme_body();
        } else {
          Tok label = next();
          auto s = out.lookup(label.text);
          if (!s) throw ScriptError("unknown scheme '" + label.text + "'", label.line);
          b.cert.target = *s;
        }
        accept(";");
      } else if (key.text == "instance") {
        b.cert.instance_subst = substitution();
        accept(";");
      } else if (key.text == "transform") {
        if (accept("sym")) {
          b.cert.transform.symmetric = true;
          b.mode = SupertruthMode::Semisupertruth;
        }
        b.cert.transform.i = number();
        b.cert.transform.j = number();
        accept(";");
      } else if (key.text == "mode") {
        Tok m = next();
        if (m.text == "supertruth") b.mode = SupertruthMode::Supertruth;
        else if (m.text == "semisupertruth") b.mode = SupertruthMode::Semisupertruth;
        else throw ScriptError("mode is 'supertruth' or 'semisupertruth'", m.line);
        accept(";");
      } else if (key.text == "then") {
        b.cert.then_subst = substitution();
        accept(";");
      } else if (key.text == "refute") {
        Tok m = next();
        if (m.text != "eq-decide")
          throw ScriptError("only 'refute eq-decide' is supported", m.line);
        accept(";");
      } else {
        throw ScriptError("unexpected '" + key.text + "' in supercert block", key.line);
      }
    }
    out.supercerts.push_back(std::move(b));
  }

  void run() {
    while (!done()) {
      Tok t = next();
      if (t.text == "language") language_block();
      else if (t.text == "scheme") {
        size_t before = out.schemes.size();
        scheme_block();
        scheme_hyp_names[out.schemes[before].first] = last_hyp_names;
      } else if (t.text == "proof") proof_block();
      else if (t.text == "cert") cert_block();
      else if (t.text == "supercert") supercert_block();
      else throw ScriptError("unexpected top-level '" + t.text + "'", t.line);
    }
  }
};

}  // namespace

AxiomSet ScriptFile::resolve_axioms() const {
  AxiomSet set;
  for (const AxiomEntry& e : axiom_db().entries()) set.emplace(e.label, e.scheme);
  for (const AxiomEntry& e : predicate_axioms(language, true)) set.emplace(e.label, e.scheme);
  for (const auto& [name, s] : schemes) set[name] = s;  // script schemes shadow
  return set;
}

AxiomSet ScriptFile::resolve_sources(const std::vector<std::string>& sources) const {
  AxiomSet all = resolve_axioms();
  AxiomSet set;
  for (const std::string& src : sources) {
    if (axiom_db().has_system(src)) {
      for (const std::string& l : axiom_db().system(src)) set.emplace(l, axiom_db().get(l).scheme);
      continue;
    }
    auto it = all.find(src);
    if (it == all.end()) throw UnknownLabel(src);
    set.emplace(it->first, it->second);
  }
  return set;
}

std::optional<Scheme> ScriptFile::lookup(const std::string& label) const {
  for (const auto& [name, s] : schemes)
    if (name == label) return s;
  if (axiom_db().has(label)) return axiom_db().get(label).scheme;
  for (const AxiomEntry& e : predicate_axioms(language, true))
    if (e.label == label) return e.scheme;
  return std::nullopt;
}

ScriptFile parse_script(const std::string& text) {
  Parser p{lex(text)};
  p.run();
  return std::move(p.out);
}

ScriptFile parse_script_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_script(ss.str());
}

}  // namespace schemata
