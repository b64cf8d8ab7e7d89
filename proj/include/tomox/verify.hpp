#pragma once

#include <string>
#include <vector>

#include "tomox/io.hpp"

namespace tomox {

struct CheckResult {
    std::string name;
    double residual = 0.0;
    double tolerance = 0.0;
    bool passed = false;
};

struct VerificationReport {
    std::vector<CheckResult> checks;  // sorted by name
    std::vector<std::pair<std::string, double>> criterion_seconds;
    std::string grid_summary;
    std::string signal_summary;
    double wall_seconds = 0.0;

    bool all_passed() const {
        for (const auto& c : checks)
            if (!c.passed) return false;
        return true;
    }
};

// Runs the full identity suite (module invariants plus the acceptance
// checks) on the configured grids and signals. Deterministic: same config and
// inputs give an identical report.
VerificationReport run_verify(const Config& config);

// JSON serialization; timing is volatile and only included on request.
std::string serialize_report(const VerificationReport& report, bool include_timing = false);

}  // namespace tomox
