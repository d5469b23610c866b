#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace cpv::check {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  double seconds = 0;
  double time_limit = 0;
  std::string detail;
};

/// Runs the full acceptance battery. Each criterion's exact checks and time
/// limit are pinned in the implementation.
std::vector<CriterionResult> run_acceptance(std::uint64_t seed);

/// One "PASS|FAIL [id] name (t s / limit s): detail" line per criterion.
void print_results(std::ostream& os, const std::vector<CriterionResult>& results);

}  // namespace cpv::check
