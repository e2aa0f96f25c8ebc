#pragma once

#include "gwkit/surface_invariants.hpp"

#include <vector>

namespace gwkit {

struct SuiteOptions {
    // Deliberately flips the sign convention inside the closed-formula suite
    // so the failure path (counterexample report, exit code 2) can be tested.
    bool inject_convention_flip = false;
};

// Acceptance-grade identity suites, each exact (zero tolerance) at its
// contract scale. detail carries the first counterexample on failure.
CheckResult suite_closed_formula(const SuiteOptions& opts = {});
CheckResult suite_hurwitz_oracles();
CheckResult suite_one_part();
CheckResult suite_stationary_double();
CheckResult suite_localization();
CheckResult suite_rubber_theta();
CheckResult suite_q_rationality();
CheckResult suite_hodge();
CheckResult suite_removal_relation();
CheckResult suite_exclusions();

std::vector<CheckResult> run_identity_suites(const SuiteOptions& opts = {});

} // namespace gwkit
