#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace lommel::verify {

// One property suite: pass iff worst <= threshold.  Count-style suites
// report the violation count in `worst`; metric suites report the largest
// observed error.
struct SuiteResult {
  std::string name;
  double worst;
  double threshold;
  bool pass;
};

struct Report {
  std::vector<SuiteResult> suites;
  bool all_pass;
};

// Run every suite.  The seed fixes all random sampling (each suite derives
// its own stream, so results do not depend on suite order).  A positive
// tol_override replaces every suite threshold.
Report run_all(std::uint64_t seed, double tol_override = 0.0);

}  // namespace lommel::verify
