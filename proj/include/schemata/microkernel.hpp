// Minimal verifier for a Metamath subset: $c $v $f $e $a $p $d, nested ${ $}
// scopes, uncompressed proofs, '?' marking incomplete proofs.
#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <set>
#include <string>
#include <vector>

namespace schemata::mm {

using Expression = std::vector<std::string>;

struct Hypothesis {
  std::string label;
  Expression statement;
  bool floating = false;  // $f vs $e
};

struct Assertion {
  std::string label;
  Expression statement;
  bool provable = false;  // $p vs $a
  std::vector<std::string> mandatory;  // labels of mandatory hypotheses, frame order
  std::set<std::pair<std::string, std::string>> disjoint;  // variable pairs
  std::vector<std::string> proof;  // uncompressed label list; may contain "?"
};

struct MMDatabase {
  std::set<std::string> constants;
  std::set<std::string> variables;
  std::map<std::string, Hypothesis> hypotheses;
  std::vector<Assertion> assertions;  // in database order
  std::map<std::string, size_t> assertion_index;

  const Assertion* find(const std::string& label) const;
};

struct MMError : std::runtime_error {
  MMError(const std::string& msg, size_t line)
      : std::runtime_error("line " + std::to_string(line) + ": " + msg), line(line) {}
  size_t line;
};

MMDatabase mm_parse(const std::string& text);

enum class ProofStatus : uint8_t { Verified, Incomplete, Error };

struct ProofResult {
  std::string label;
  ProofStatus status = ProofStatus::Error;
  std::string detail;
};

std::vector<ProofResult> mm_verify(const MMDatabase& db);

// Closure of derivable expressions to a given derivation depth (axioms and
// floating hypotheses as leaves). Used to check variable-freeness claims.
std::set<Expression> mm_derivable(const MMDatabase& db, uint32_t depth);

}  // namespace schemata::mm
