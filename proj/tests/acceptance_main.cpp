// Runs every registered acceptance criterion with exact (tolerance-zero)
// comparisons and prints one line per criterion.
#include <cstdio>
#include <exception>
#include <string>

#include "qlef/verify.hpp"

int main() {
  std::vector<qlef::CriterionResult> results;
  try {
    results = qlef::run_acceptance("all", 1);
  } catch (const std::exception& e) {
    std::printf("FATAL: acceptance run aborted: %s\n", e.what());
    return 2;
  }

  int failed = 0;
  for (const auto& r : results) {
    if (r.pass) {
      std::printf("PASS %-28s %s\n", r.id.c_str(), r.description.c_str());
    } else {
      ++failed;
      std::printf("FAIL %-28s %s\n     expected: %s\n     got:      %s\n", r.id.c_str(),
                  r.description.c_str(), r.expected.c_str(), r.got.c_str());
    }
  }
  std::printf("%d/%d acceptance criteria passed\n", static_cast<int>(results.size()) - failed,
              static_cast<int>(results.size()));
  return failed == 0 ? 0 : 1;
}
