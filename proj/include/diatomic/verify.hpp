#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "diatomic/workspace.hpp"

namespace diatomic {

struct VerifyOptions {
    uint64_t bound = 0;  // 0 = per-suite default
    unsigned jobs = 1;
    uint64_t seed = 1;   // randomized suites are deterministic per seed
};

struct SuiteResult {
    std::string name;
    std::string summary;                // what was checked, with effective bounds
    uint64_t cases = 0;
    uint64_t failures = 0;
    std::vector<std::string> examples;  // first few failing instances
    double seconds = 0;

    bool passed() const { return failures == 0; }
};

// Registered suite names, in registry order.
std::vector<std::string> verify_suite_names();

// Run one suite; throws std::invalid_argument for an unknown name.
SuiteResult verify_run(const std::string& name, Workspace& ws, const VerifyOptions& opt = {});

// Run every registered suite.
std::vector<SuiteResult> verify_run_all(Workspace& ws, const VerifyOptions& opt = {});

}  // namespace diatomic
