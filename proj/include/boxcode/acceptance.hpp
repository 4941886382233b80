#pragma once

// End-to-end acceptance checks. Shared by the acceptance test binary and the
// `selftest` CLI subcommand.

#include <ostream>
#include <string>
#include <vector>

namespace boxcode {

struct CriterionResult {
  int id;
  std::string title;
  bool passed;
  std::string detail;
  double seconds;
};

/// Runs criteria 1..10 (or only `only` when nonzero), printing one
/// "[PASS]"/"[FAIL]" line per criterion to `out` as each finishes.
std::vector<CriterionResult> run_acceptance(std::ostream& out, int only = 0);

}  // namespace boxcode
