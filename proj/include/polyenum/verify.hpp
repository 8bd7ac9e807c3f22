#pragma once

#include <functional>
#include <string>
#include <vector>

namespace polyenum {

// One end-to-end acceptance check. The battery cross-validates the closed
// forms, the solvers and the brute-force enumerations against each other;
// `detail` names what was compared, or the first discrepancy found.
struct CheckResult {
    int number = 0;
    std::string name;
    bool passed = false;
    std::string detail;
};

// Runs the ten checks in order, reporting each finished one through
// `progress` (several take seconds). An exception inside a check is caught
// and reported as that check's failure, so the battery always returns ten
// results; the last one also enforces the overall time budget.
std::vector<CheckResult> run_all_checks(
    const std::function<void(const CheckResult&)>& progress = {});

}  // namespace polyenum
