#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace goose::acceptance {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;
};

struct Options {
    int workers = 0;                 ///< 0 -> hardware concurrency
    std::uint64_t master_seed = 42;  ///< statistical criteria are seeded runs
    bool verbose = false;            ///< print one line per criterion as it finishes
};

/// Runs the full acceptance suite: statistical reproduction bands for the
/// benchmark and engineering results, then the property suites. Criteria
/// tolerances are pinned in code.
std::vector<CriterionResult> run_all(const Options& options = {});

bool all_passed(const std::vector<CriterionResult>& results);

std::string format_line(const CriterionResult& result);

} // namespace goose::acceptance
