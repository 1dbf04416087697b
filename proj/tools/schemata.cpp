// Command-line front end: proof/certificate verification, the pure-equality
// decision procedure, transforms, the axiom catalog, truth-table search, and
// the bundled reproduction suite.
#include <cstdlib>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "json.hpp"

#include "schemata/axiomdb.hpp"
#include "schemata/certs.hpp"
#include "schemata/microkernel.hpp"
#include "schemata/models.hpp"
#include "schemata/objectlevel.hpp"
#include "schemata/script.hpp"
#include "schemata/transforms.hpp"

using nlohmann::json;
using namespace schemata;

namespace {

// exit codes: 0 success, 1 semantic failure, 2 usage/resolution error
constexpr int kOk = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(bool as_json, const json& j, const std::string& text) {
  if (as_json)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text << "\n";
}

int cmd_verify(const std::string& path, bool as_json) {
  ScriptFile sf;
  try {
    sf = parse_script_file(path);
  } catch (const ScriptError& e) {
    emit(as_json, json{{"status", "parse-error"}, {"location", e.line}, {"detail", e.what()}},
         std::string("parse error: ") + e.what());
    return kUsage;
  }
  json results = json::array();
  int rc = kOk;
  for (const ProofBlock& pb : sf.proofs) {
    AxiomSet set;
    try {
      set = sf.resolve_sources(pb.axiom_sources);
    } catch (const UnknownLabel& e) {
      emit(as_json, json{{"status", "unknown-axiom"}, {"detail", e.what()}}, e.what());
      return kUsage;
    }
    VerifyReport r = verify_proof(pb.proof, set);
    json jr{{"proof", pb.proof.name},
            {"status", r.ok ? "ok" : to_string(r.error)},
            {"location", r.line + 1},
            {"detail", r.detail}};
    results.push_back(jr);
    if (!r) {
      rc = r.error == VerifyError::UnknownAxiom ? kUsage : kFail;
      if (!as_json)
        std::cout << "proof " << pb.proof.name << ": " << to_string(r.error) << " at line "
                  << r.line + 1 << ": " << r.detail << "\n";
    } else if (!as_json) {
      std::cout << "proof " << pb.proof.name << ": ok (" << pb.proof.lines.size() << " lines)\n";
    }
  }
  if (sf.proofs.empty() && !as_json) std::cout << "no proof blocks in " << path << "\n";
  if (as_json) std::cout << json{{"status", rc == kOk ? "ok" : "fail"}, {"proofs", results}}.dump(2) << "\n";
  return rc;
}

int cmd_check_cert(const std::string& path, bool as_json) {
  ScriptFile sf;
  try {
    sf = parse_script_file(path);
  } catch (const ScriptError& e) {
    emit(as_json, json{{"status", "parse-error"}, {"location", e.line}, {"detail", e.what()}},
         std::string("parse error: ") + e.what());
    return kUsage;
  }
  AxiomSet axioms = sf.resolve_axioms();
  int rc = kOk;
  json results = json::array();
  for (const IndependenceCertificate& c : sf.certs) {
    CertReport r = check_certificate(c, axioms);
    json lines = json::array();
    for (const CertCheckLine& l : r.lines)
      lines.push_back(json{{"label", l.label}, {"ok", l.ok}, {"detail", l.detail}});
    results.push_back(json{{"cert", r.name}, {"status", r.ok ? "ok" : "fail"},
                           {"bounds", r.bounds}, {"lines", lines}});
    if (!as_json) {
      std::cout << "cert " << r.name << ": " << (r.ok ? "OK" : "FAIL") << "\n";
      for (const CertCheckLine& l : r.lines)
        std::cout << "  " << (l.ok ? " ok " : "FAIL") << " " << l.label << ": " << l.detail << "\n";
    }
    if (!r.ok) rc = kFail;
  }
  for (const SupercertBlock& sb : sf.supercerts) {
    SupertruthReport r = verify_not_supertrue(sb.cert, sb.mode);
    results.push_back(json{{"supercert", sb.cert.name}, {"status", r.ok ? "ok" : "fail"},
                           {"detail", r.detail}});
    if (!as_json)
      std::cout << "supercert " << sb.cert.name << ": " << (r.ok ? "OK" : "FAIL") << " — "
                << r.detail << "\n";
    if (!r.ok) rc = kFail;
  }
  if (as_json) std::cout << json{{"status", rc == kOk ? "ok" : "fail"}, {"results", results}}.dump(2) << "\n";
  return rc;
}

int cmd_mm_verify(const std::string& path, bool as_json) {
  try {
    mm::MMDatabase db = mm::mm_parse(read_file(path));
    auto results = mm::mm_verify(db);
    int rc = kOk;
    json jr = json::array();
    for (const auto& r : results) {
      std::string status = r.status == mm::ProofStatus::Verified
                               ? "verified"
                               : r.status == mm::ProofStatus::Incomplete ? "incomplete" : "error";
      jr.push_back(json{{"label", r.label}, {"status", status}, {"detail", r.detail}});
      if (!as_json) std::cout << r.label << ": " << status
                              << (r.detail.empty() ? "" : " (" + r.detail + ")") << "\n";
      if (r.status == mm::ProofStatus::Error) rc = kFail;
    }
    if (as_json) std::cout << json{{"status", rc == kOk ? "ok" : "fail"}, {"proofs", jr}}.dump(2) << "\n";
    return rc;
  } catch (const mm::MMError& e) {
    emit(as_json, json{{"status", "parse-error"}, {"detail", e.what()}}, e.what());
    return kUsage;
  } catch (const std::exception& e) {
    emit(as_json, json{{"status", "error"}, {"detail", e.what()}}, e.what());
    return kUsage;
  }
}

int cmd_decide(const std::string& text, bool as_json, const std::string& dv_spec) {
  try {
    Formula f = parse_formula(text);
    DvSet dv;
    if (!dv_spec.empty()) {
      // "x0,x1;x0,x2" style pair list
      std::istringstream ss(dv_spec);
      std::string pair;
      while (std::getline(ss, pair, ';')) {
        auto comma = pair.find(',');
        if (comma == std::string::npos) throw std::runtime_error("bad --dv, use x0,x1;x0,x2");
        auto parse_mv = [](const std::string& s) {
          if (s.size() < 2 || (s[0] != 'x' && s[0] != 'f'))
            throw std::runtime_error("bad metavariable " + s);
          uint32_t idx = static_cast<uint32_t>(std::stoul(s.substr(1)));
          return s[0] == 'x' ? var_mv(idx) : fm_mv(idx);
        };
        dv.insert(parse_mv(pair.substr(0, comma)), parse_mv(pair.substr(comma + 1)));
      }
    }
    EqTruthDetail d = decide_eq_truth_detail(Scheme(f, dv));
    json sizes = json::array();
    for (size_t k = 0; k < d.valid_at_size.size(); ++k)
      sizes.push_back(json{{"size", k + 1}, {"valid", static_cast<bool>(d.valid_at_size[k])}});
    std::ostringstream os;
    os << (d.truth ? "true" : "false") << " (bound " << d.bound << "; per-size:";
    for (size_t k = 0; k < d.valid_at_size.size(); ++k)
      os << " " << k + 1 << "=" << (d.valid_at_size[k] ? "T" : "F");
    os << ")";
    emit(as_json,
         json{{"status", d.truth ? "true" : "false"}, {"bounds", d.bound}, {"sizes", sizes}},
         os.str());
    return d.truth ? kOk : kFail;
  } catch (const std::exception& e) {
    emit(as_json, json{{"status", "error"}, {"detail", e.what()}}, e.what());
    return kUsage;
  }
}

int cmd_transform(uint32_t i, uint32_t j, bool sym, const std::string& text, bool as_json) {
  try {
    Formula f = parse_formula(text);
    Formula out = sym ? sym_transform(i, j, f) : transform(i, j, f);
    emit(as_json, json{{"status", "ok"}, {"result", render(out)}}, render(out));
    return kOk;
  } catch (const std::exception& e) {
    emit(as_json, json{{"status", "error"}, {"detail", e.what()}}, e.what());
    return kUsage;
  }
}

int cmd_instantiate(const std::string& label, const std::vector<std::string>& maps, bool as_json) {
  try {
    if (!axiom_db().has(label)) throw UnknownLabel(label);
    Scheme s = axiom_db().get(label).scheme;
    Substitution sub;
    for (const std::string& m : maps) {
      auto eq = m.find('=');
      if (eq == std::string::npos) throw std::runtime_error("use f0='FMLA' or x0=x1");
      std::string lhs = m.substr(0, eq), rhs = m.substr(eq + 1);
      if (lhs.size() < 2) throw std::runtime_error("bad metavariable " + lhs);
      uint32_t idx = static_cast<uint32_t>(std::stoul(lhs.substr(1)));
      if (lhs[0] == 'f') {
        sub.set_fm(idx, parse_formula(rhs));
      } else if (lhs[0] == 'x') {
        Formula v = parse_formula(rhs + " = " + rhs);  // reuse variable parser
        sub.set_var(idx, v.eq_lhs());
      } else {
        throw std::runtime_error("bad metavariable " + lhs);
      }
    }
    Scheme out = instantiate(sub, s);
    emit(as_json, json{{"status", "ok"}, {"result", out.describe()}}, out.describe());
    return kOk;
  } catch (const IllegitimateSubstitution& e) {
    emit(as_json, json{{"status", "illegitimate"}, {"detail", e.what()}}, e.what());
    return kFail;
  } catch (const std::exception& e) {
    emit(as_json, json{{"status", "error"}, {"detail", e.what()}}, e.what());
    return kUsage;
  }
}

int cmd_axioms(const std::string& sub, const std::string& arg, bool as_json) {
  const AxiomDb& db = axiom_db();
  if (sub == "list") {
    json names = json::array();
    for (const AxiomEntry& e : db.entries()) {
      names.push_back(e.label);
      if (!as_json) std::cout << e.label << ": " << e.scheme.describe() << "\n";
    }
    if (as_json) std::cout << json{{"status", "ok"}, {"labels", names}}.dump(2) << "\n";
    return kOk;
  }
  if (sub == "show") {
    if (!db.has(arg)) {
      emit(as_json, json{{"status", "unknown-label"}, {"detail", arg}}, "unknown label " + arg);
      return kUsage;
    }
    const AxiomEntry& e = db.get(arg);
    json j{{"status", "ok"}, {"label", e.label}, {"scheme", e.scheme.describe()}};
    std::string text = e.label + ": " + e.scheme.describe();
    if (e.set_mm_label) {
      j["set_mm"] = *e.set_mm_label;
      text += "   [set.mm: " + *e.set_mm_label + "]";
    }
    emit(as_json, j, text);
    return kOk;
  }
  if (sub == "system") {
    if (!db.has_system(arg)) {
      emit(as_json, json{{"status", "unknown-system"}, {"detail", arg}}, "unknown system " + arg);
      return kUsage;
    }
    auto labels = db.system(arg);
    json j{{"status", "ok"}, {"system", arg}, {"labels", labels}};
    std::string text = arg + ":";
    for (const auto& l : labels) text += " " + l;
    emit(as_json, j, text);
    return kOk;
  }
  if (sub == "map") {
    json rows = json::array();
    for (const auto& [a, b] : db.label_map()) {
      rows.push_back(json{{"article", a}, {"set_mm", b}});
      if (!as_json) std::cout << a << " <-> " << b << "\n";
    }
    if (as_json) std::cout << json{{"status", "ok"}, {"map", rows}}.dump(2) << "\n";
    return kOk;
  }
  emit(as_json, json{{"status", "usage"}}, "axioms: list | show LABEL | system NAME | map");
  return kUsage;
}

int cmd_search_table(uint32_t values, const std::string& validate, const std::string& falsify,
                     uint64_t budget, bool as_json) {
  try {
    const AxiomDb& db = axiom_db();
    std::vector<Scheme> vals;
    std::istringstream ss(validate);
    std::string label;
    while (std::getline(ss, label, ',')) vals.push_back(db.get(label).scheme);
    Scheme target = db.get(falsify).scheme;
    TableSearchResult r = search_truth_table(values, vals, target, budget);
    if (r.table) {
      std::ostringstream os;
      os << "witness found after " << r.evaluations << " evaluations\nimp:";
      for (const auto& row : r.table->imp_table) {
        os << "\n ";
        for (uint32_t v : row) os << " " << v;
      }
      os << "\nneg:";
      for (uint32_t v : r.table->neg_table) os << " " << v;
      json j{{"status", "found"}, {"evaluations", r.evaluations}};
      j["imp"] = r.table->imp_table;
      j["neg"] = r.table->neg_table;
      emit(as_json, j, os.str());
      return kOk;
    }
    if (r.exhausted) {
      emit(as_json, json{{"status", "none-exhaustive"}, {"evaluations", r.evaluations}},
           "none (exhaustive after " + std::to_string(r.evaluations) + " evaluations)");
      return kFail;
    }
    emit(as_json, json{{"status", "budget-exhausted"}, {"evaluations", r.evaluations}},
         "budget exhausted");
    return kFail;
  } catch (const std::exception& e) {
    emit(as_json, json{{"status", "error"}, {"detail", e.what()}}, e.what());
    return kUsage;
  }
}

int cmd_suite(const std::string& only, uint32_t height, bool as_json) {
  SuiteOptions opts;
  opts.only = only;
  opts.gen_height = height;
  auto lines = run_suite(opts);
  bool all = true;
  json jr = json::array();
  for (const SuiteLine& l : lines) {
    all = all && l.ok;
    jr.push_back(json{{"name", l.name}, {"status", l.ok ? "pass" : "fail"},
                      {"detail", l.detail}, {"bounds", l.bounds}});
    if (!as_json) {
      std::cout << (l.ok ? "PASS" : "FAIL") << "  " << l.name;
      if (!l.bounds.empty()) std::cout << "  [" << l.bounds << "]";
      if (!l.ok) std::cout << "\n      " << l.detail;
      std::cout << "\n";
    }
  }
  if (as_json) std::cout << json{{"status", all ? "ok" : "fail"}, {"results", jr}}.dump(2) << "\n";
  return all ? kOk : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"scheme-level first-order logic toolkit"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "machine-readable output");

  std::string path, text, dv_spec, only, validate, falsify, label, sub, arg;
  std::vector<std::string> maps;
  uint32_t ti = 0, tj = 0, values = 2, height = 3;
  bool sym = false;
  uint64_t budget = 100000000ull;

  auto* verify = app.add_subcommand("verify", "verify proof blocks in a script file");
  verify->add_option("file", path)->required();

  auto* mmv = app.add_subcommand("mm-verify", "verify a Metamath subset database");
  mmv->add_option("file", path)->required();

  auto* decide = app.add_subcommand("decide", "pure-equality truth decision");
  decide->add_option("formula", text)->required();
  decide->add_option("--dv", dv_spec, "DV pairs, e.g. x0,x1;x0,f0");

  auto* tr = app.add_subcommand("transform", "(i,j)-transform of a metaformula");
  tr->add_option("i", ti)->required();
  tr->add_option("j", tj)->required();
  tr->add_flag("--sym", sym, "symmetric {i,j}-transform");
  tr->add_option("formula", text)->required();

  auto* inst = app.add_subcommand("instantiate", "instantiate a catalog axiom");
  inst->add_option("label", label)->required();
  inst->add_option("map", maps, "f0=( f0 -> f1 ) or x0=x1");

  auto* ax = app.add_subcommand("axioms", "catalog queries");
  ax->add_option("what", sub, "list | show | system | map")->required();
  ax->add_option("arg", arg);

  auto* cc = app.add_subcommand("check-cert", "check cert/supercert blocks in a script file");
  cc->add_option("file", path)->required();

  auto* st = app.add_subcommand("search-table", "search for a separating truth table");
  st->add_option("--values", values)->required();
  st->add_option("--validate", validate, "comma-separated labels")->required();
  st->add_option("--falsify", falsify)->required();
  st->add_option("--budget", budget);

  auto* suite = app.add_subcommand("suite", "run the bundled reproduction suite");
  suite->add_option("--only", only, "substring filter on fixture names");
  suite->add_option("--bounds", height, "gen-valuation height bound");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*verify) return cmd_verify(path, as_json);
    if (*mmv) return cmd_mm_verify(path, as_json);
    if (*decide) return cmd_decide(text, as_json, dv_spec);
    if (*tr) return cmd_transform(ti, tj, sym, text, as_json);
    if (*inst) return cmd_instantiate(label, maps, as_json);
    if (*ax) return cmd_axioms(sub, arg, as_json);
    if (*cc) return cmd_check_cert(path, as_json);
    if (*st) return cmd_search_table(values, validate, falsify, budget, as_json);
    if (*suite) return cmd_suite(only, height, as_json);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
