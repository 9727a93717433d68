#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dechain/io.hpp"

namespace dechain {

struct CheckResult {
  std::string name;
  long cases = 0;
  long failures = 0;
  /// First failing case, serialized; null when everything passed.
  Json counterexample;
  bool passed() const { return failures == 0 && cases > 0; }
};

struct SuiteReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::vector<CheckResult> checks;
  double seconds = 0;

  bool passed() const;
  const CheckResult* find(const std::string& check) const;
  /// Timings are left out unless asked for, so reports are byte-stable for a fixed seed.
  Json to_json(bool with_timing = false) const;
};

struct SuiteOptions {
  /// Random cases per randomized check; 0 picks the suite default.
  int cases = 0;
  std::uint64_t seed = 1;
};

const std::vector<std::string>& suite_names();
/// Throws std::invalid_argument for an unknown suite.
SuiteReport run_suite(const std::string& name, const SuiteOptions& opts = {});

/// Builder expressions of the reference corpus of spaces.
const std::vector<std::string>& corpus_names();

}  // namespace dechain
