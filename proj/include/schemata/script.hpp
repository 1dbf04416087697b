// Script files: language, scheme, proof, cert, and supercert blocks in one
// parse pass with forward references rejected.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "schemata/axiomdb.hpp"
#include "schemata/models.hpp"
#include "schemata/proof.hpp"
#include "schemata/transforms.hpp"

namespace schemata {

struct ProofBlock {
  ProofScript proof;
  std::vector<std::string> axiom_sources;  // system names, catalog labels, or script schemes
};

struct SupercertBlock {
  SupertruthCertificate cert;
  SupertruthMode mode = SupertruthMode::Supertruth;
};

struct ScriptFile {
  Language language;
  std::vector<std::pair<std::string, Scheme>> schemes;
  std::vector<ProofBlock> proofs;
  std::vector<IndependenceCertificate> certs;
  std::vector<SupercertBlock> supercerts;

  // catalog + predicate axioms for the language + script-declared schemes
  AxiomSet resolve_axioms() const;
  AxiomSet resolve_sources(const std::vector<std::string>& sources) const;
  std::optional<Scheme> lookup(const std::string& label) const;
};

struct ScriptError : std::runtime_error {
  ScriptError(const std::string& msg, size_t line)
      : std::runtime_error("line " + std::to_string(line) + ": " + msg), line(line) {}
  size_t line;
};

ScriptFile parse_script(const std::string& text);
ScriptFile parse_script_file(const std::string& path);

}  // namespace schemata
