#pragma once

#include <string>
#include <vector>

namespace qlef {

struct CriterionResult {
  std::string id;
  std::string description;
  std::string expected;
  std::string got;
  bool pass = false;
};

// Runs the acceptance checklist. Suites: "all", "p2", "quintic1", "fdg",
// "harmonic", "binomial", "hypertail", "oracles", "structural", "appendix"
// (the generating-function subset: fdg + harmonic + binomial + the series
// oracles). All comparisons are exact. Unknown suite names throw.
std::vector<CriterionResult> run_acceptance(const std::string& suite, unsigned seed = 1);

}  // namespace qlef
