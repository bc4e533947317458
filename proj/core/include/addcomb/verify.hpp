#pragma once

#include <string>
#include <vector>

namespace addcomb {

struct CriterionResult {
  int id = 0;
  std::string name;
  std::string module_tag;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

/// Runs the acceptance criteria, optionally filtered to the given module
/// tags (harmonic, bohr, configs, gridnorm, increment, sumfree, cli). Every
/// criterion is deterministic: thresholds and seeds are pinned here.
std::vector<CriterionResult> run_acceptance(const std::vector<std::string>& scope = {});

/// All module tags known to the suite, in criterion order.
std::vector<std::string> acceptance_scopes();

}  // namespace addcomb
