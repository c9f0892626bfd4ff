#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace fsb {

struct SuiteCheck {
  std::string name;
  std::string provenance;
  nlohmann::json inputs;
  nlohmann::json outputs;
  bool passed = true;
  bool skipped = false;
  std::string skip_reason;
};

struct SuiteReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::uint64_t budget = 0;
  std::vector<SuiteCheck> checks;

  bool passed() const;
  std::size_t failures() const;
  std::size_t skipped() const;
  nlohmann::json to_json() const;
};

std::vector<std::string> suite_names();

// Runs one named batch: braid, classify, genus, connectivity, counting or
// cancellation. Deterministic in (name, seed, budget). Checks whose
// enumeration would exceed budget are reported as skipped.
SuiteReport run_suite(const std::string& name, std::uint64_t seed, std::uint64_t budget);

}  // namespace fsb
