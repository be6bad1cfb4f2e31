// Acceptance battery: one pass/fail line per criterion, the full JSON report
// on stdout afterwards. Exit code 0 only when every criterion passes.

#include <iostream>

#include "urykat/suite.hpp"

int main() {
  urykat::SuiteConfig config;
  urykat::SuiteOutcome outcome = urykat::run_acceptance_suite(config, &std::cerr);

  bool all = true;
  for (const auto& criterion : outcome.report.at("criteria")) {
    const bool passed = criterion.at("passed").get<bool>();
    all = all && passed;
    std::cout << (passed ? "[PASS] " : "[FAIL] ") << "criterion "
              << criterion.at("criterion").get<int>() << ": "
              << criterion.at("name").get<std::string>() << "\n";
  }
  std::cout << "\n" << outcome.report.dump(2) << "\n";
  return all ? 0 : 1;
}
