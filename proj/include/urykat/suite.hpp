#pragma once

#include <cstddef>
#include <iosfwd>

#include <nlohmann/json.hpp>

#include "urykat/grid.hpp"

namespace urykat {

struct SuiteConfig {
  Grid build_grid{2, 2};      // certification build parameters
  int k = 2;
  int rounds = 2;
  std::size_t size_budget = 4096;
  int jobs = 1;
};

struct SuiteOutcome {
  bool all_passed = false;
  nlohmann::json report;
};

// Runs the full verification battery twice and folds the byte-identity of
// the two runs into the report. Timings go to the human stream only, so the
// report is reproducible bit for bit.
SuiteOutcome run_acceptance_suite(const SuiteConfig& config, std::ostream* human);

}  // namespace urykat
