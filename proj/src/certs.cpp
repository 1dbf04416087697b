#include "schemata/certs.hpp"

#include <future>

#include "schemata/microkernel.hpp"

namespace schemata {

// Fixture scripts are embedded verbatim; the same text is shipped under
// fixtures/ so they can be inspected and edited.
namespace fixtures {

extern const char* eqrefl_gen;
extern const char* allrefl_geneq;
extern const char* modald_from_denot;
extern const char* indep_mp;
extern const char* indep_minimp;
extern const char* indep_peirce;
extern const char* indep_contrap;
extern const char* indep_notelim;
extern const char* indep_gen;
extern const char* indep_alldistr_monk;
extern const char* indep_alldistr_nbhd;
extern const char* indep_spec;
extern const char* indep_modal5;
extern const char* indep_eqrefl;
extern const char* indep_eqsymm;
extern const char* indep_eqtrans;
extern const char* indep_denot;
extern const char* indep_subst;
extern const char* indep_pred;
extern const char* supertruth;
extern const char* appendix_a;

}  // namespace fixtures

const std::vector<BundledScript>& bundled_scripts() {
  static const std::vector<BundledScript> scripts = {
      {"eqrefl_gen.fol", fixtures::eqrefl_gen},
      {"allrefl_geneq.fol", fixtures::allrefl_geneq},
      {"modald_from_denot.fol", fixtures::modald_from_denot},
      {"indep_mp.fol", fixtures::indep_mp},
      {"indep_minimp.fol", fixtures::indep_minimp},
      {"indep_peirce.fol", fixtures::indep_peirce},
      {"indep_contrap.fol", fixtures::indep_contrap},
      {"indep_notelim.fol", fixtures::indep_notelim},
      {"indep_gen.fol", fixtures::indep_gen},
      {"indep_alldistr_monk.fol", fixtures::indep_alldistr_monk},
      {"indep_alldistr_nbhd.fol", fixtures::indep_alldistr_nbhd},
      {"indep_spec.fol", fixtures::indep_spec},
      {"indep_modal5.fol", fixtures::indep_modal5},
      {"indep_eqrefl.fol", fixtures::indep_eqrefl},
      {"indep_eqsymm.fol", fixtures::indep_eqsymm},
      {"indep_eqtrans.fol", fixtures::indep_eqtrans},
      {"indep_denot.fol", fixtures::indep_denot},
      {"indep_subst.fol", fixtures::indep_subst},
      {"indep_pred.fol", fixtures::indep_pred},
      {"supertruth.fol", fixtures::supertruth},
  };
  return scripts;
}

const char* bundled_mm_database() { return fixtures::appendix_a; }

namespace {

SuiteLine run_script(const BundledScript& bs, const SuiteOptions& opts) {
  SuiteLine line;
  line.name = bs.name;
  try {
    ScriptFile sf = parse_script(bs.text);
    AxiomSet axioms = sf.resolve_axioms();

    std::string detail;
    bool ok = true;

    for (const ProofBlock& pb : sf.proofs) {
      AxiomSet set = sf.resolve_sources(pb.axiom_sources);
      VerifyReport r = verify_proof(pb.proof, set);
      if (!r) {
        ok = false;
        detail += "proof " + pb.proof.name + ": " + to_string(r.error) + " at line " +
                  std::to_string(r.line + 1) + " (" + r.detail + "); ";
      } else {
        detail += "proof " + pb.proof.name + " ok; ";
      }
    }
    for (IndependenceCertificate cert : sf.certs) {
      if (auto* gm = std::get_if<GenValuationModel>(&cert.model))
        gm->height_bound = std::min(gm->height_bound, opts.gen_height);
      CertReport r = check_certificate(cert, axioms);
      if (!r.ok) {
        ok = false;
        detail += "cert " + r.name + ":";
        for (const CertCheckLine& l : r.lines)
          if (!l.ok) detail += " [" + l.label + "] " + l.detail + ";";
      } else {
        detail += "cert " + r.name + " ok; ";
      }
      if (!r.bounds.empty()) line.bounds = r.bounds;
    }
    for (const SupercertBlock& sb : sf.supercerts) {
      SupertruthReport r = verify_not_supertrue(sb.cert, sb.mode);
      if (!r.ok) {
        ok = false;
        detail += "supercert " + sb.cert.name + ": " + r.detail + "; ";
      } else {
        detail += "supercert " + sb.cert.name + " ok; ";
      }
    }

    line.ok = ok;
    line.detail = detail;
  } catch (const std::exception& e) {
    line.ok = false;
    line.detail = e.what();
  }
  return line;
}

}  // namespace

std::vector<SuiteLine> run_suite(const SuiteOptions& opts) {
  std::vector<SuiteLine> out;
  std::vector<const BundledScript*> selected;
  for (const BundledScript& bs : bundled_scripts()) {
    if (!opts.only.empty() && bs.name.find(opts.only) == std::string::npos) continue;
    selected.push_back(&bs);
  }

  if (opts.parallel) {
    std::vector<std::future<SuiteLine>> futs;
    futs.reserve(selected.size());
    for (const BundledScript* bs : selected)
      futs.push_back(std::async(std::launch::async, run_script, *bs, opts));
    for (auto& f : futs) out.push_back(f.get());
  } else {
    for (const BundledScript* bs : selected) out.push_back(run_script(*bs, opts));
  }

  // the Appendix A database rides along as its own suite entry
  if (opts.only.empty() || std::string("appendix_a.mm").find(opts.only) != std::string::npos) {
    SuiteLine line;
    line.name = "appendix_a.mm";
    try {
      mm::MMDatabase db = mm::mm_parse(bundled_mm_database());
      auto results = mm::mm_verify(db);
      bool ok = true;
      std::string detail;
      for (const auto& r : results) {
        detail += r.label + "=" +
                  (r.status == mm::ProofStatus::Verified
                       ? "verified"
                       : r.status == mm::ProofStatus::Incomplete ? "incomplete" : "error") +
                  " ";
        if (r.label == "nn")
          ok = ok && r.status == mm::ProofStatus::Incomplete;
        else
          ok = ok && r.status == mm::ProofStatus::Verified;
      }
      line.ok = ok;
      line.detail = detail;
    } catch (const std::exception& e) {
      line.ok = false;
      line.detail = e.what();
    }
    out.push_back(std::move(line));
  }
  return out;
}

}  // namespace schemata
