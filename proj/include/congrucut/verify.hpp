#pragma once

// Acceptance runner: one pass/fail result per criterion.

#include <iosfwd>
#include <string>
#include <vector>

namespace congrucut {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
};

// runs every acceptance criterion; `fast` uses coarser grids and fewer
// starts with the widened tolerances defined for that mode
std::vector<CriterionResult> run_acceptance(bool fast, std::ostream& log);

// subsets, used by the per-criterion test registration
CriterionResult run_criterion(int id, bool fast, std::ostream& log);

}  // namespace congrucut
