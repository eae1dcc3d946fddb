#pragma once

// Self-validation suite: reproduces the model's closed-form limits, the
// capacitive restoration of the ideal-metal result, the low-temperature t^6
// law, the Fig.-1 style entropy scan, the Langevin cross-check and the
// geometry oracle, each with a pinned tolerance.

#include <string>
#include <vector>

namespace thermowire {

struct CriterionResult {
  std::string name;
  bool passed = false;
  std::string detail;  // measured values / tolerance summary
};

struct ValidationOptions {
  // tolerances are divided by this factor; > 1 tightens every check
  double tighten = 1.0;
  // run only criteria whose name contains this substring (empty: all)
  std::string filter;
};

std::vector<CriterionResult> run_validation(const ValidationOptions& opts = {});

}  // namespace thermowire
