// Bundled proof fixtures and independence certificates, runnable as a suite.
#pragma once

#include <string>
#include <vector>

#include "schemata/script.hpp"

namespace schemata {

struct BundledScript {
  std::string name;  // also the fixture file name under fixtures/
  const char* text;
};

const std::vector<BundledScript>& bundled_scripts();
const char* bundled_mm_database();  // the Term/Nat database

struct SuiteLine {
  std::string name;
  bool ok = false;
  std::string detail;
  std::string bounds;
};

struct SuiteOptions {
  std::string only;            // run a single certificate by name
  uint32_t gen_height = 3;     // gen-valuation enumeration bound
  bool parallel = true;
};

std::vector<SuiteLine> run_suite(const SuiteOptions& opts = {});

}  // namespace schemata
