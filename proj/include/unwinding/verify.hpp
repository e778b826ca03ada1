#pragma once

#include <string>
#include <vector>

#include "unwinding/metrics.hpp"

namespace unwinding {

/// Outcome of one invariant suite. slack is the smallest margin by which a
/// case cleared its tolerance; negative slack means that case failed.
struct CheckResult {
    std::string name;
    long cases = 0;
    long failures = 0;
    double worst_slack = 0.0;
};

struct VerifyOptions {
    /// Normalization of the boundary energy identity; overridable so a
    /// corrupted constant demonstrably fails the suite.
    double energy_kappa = kEnergyIdentityKappa;
};

/// Run every invariant suite whose name contains the filter substring
/// (all suites when the filter is empty).
std::vector<CheckResult> run_verify(const std::string& filter = {},
                                    const VerifyOptions& options = {});

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace unwinding
