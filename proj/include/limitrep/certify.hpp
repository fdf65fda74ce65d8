#pragma once

// Desk-scale certification suite: each runner checks one finite-level
// property end to end and reports a verdict with details.  The CLI `certify`
// subcommand and the acceptance test binary both drive these.

#include <string>
#include <vector>

namespace limitrep::certify {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  std::string details; // JSON
};

CriterionResult run_criterion(int id);
std::vector<CriterionResult> run_all();
constexpr int criterion_count = 11;

} // namespace limitrep::certify
