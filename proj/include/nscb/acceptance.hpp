#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace nscb::acceptance {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

// Runs every acceptance criterion whose name contains the filter (all when
// empty), printing one pass/fail line per criterion to out.
std::vector<CriterionResult> run_all(const std::string& filter, std::ostream& out);

}  // namespace nscb::acceptance
