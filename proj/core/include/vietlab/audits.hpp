#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "vietlab/local_structure.hpp"

namespace vietlab {

struct AuditResult {
    std::string name;
    int instances = 0;
    long trials = 0;
    long failures = 0;
    std::string counterexample;  // empty when the audit passed
    bool passed() const { return failures == 0; }
};

struct AuditConfig {
    std::uint64_t seed = 7;
    int instances = 10;
    int containment_trials = 500;  // per instance, for each inclusion audit
    int convexity_trials = 100;    // per instance (1000 total at 10 instances)
    int witness_trials = 50;       // per instance (500 total)
    int retraction_trials = 20;    // per instance (200 total)
    int path_steps = 6;
    double lipschitz_slack = 1e-9;
};

/// Runs the full randomized audit suite: the three neighborhood-basis
/// inclusions, the two convexity checks, the redistribution witness, and the
/// retraction-path membership, endpoint, and Lipschitz checks. Any
/// counterexample is a hard failure and is recorded verbatim.
std::vector<AuditResult> run_neighborhood_audits(const AuditConfig& config);

bool all_passed(const std::vector<AuditResult>& results);

}  // namespace vietlab
