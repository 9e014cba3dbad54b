#pragma once

#include "rieffel/report.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace rieffel {

struct SuiteConfig {
    int N = 0;                 // 0: use each check's pinned grid size
    int d = 0;                 // 0: use each check's pinned fiber dimension
    uint64_t seed = 7;
    std::string backend = "all";      // all|translation|inner|torus
    std::vector<std::string> checks;  // empty: all
    double tol_scale = 1.0;
    bool timings = false;
};

SuiteConfig load_config(const std::string& path);   // JSON; throws on bad input

std::vector<std::string> known_checks();
std::vector<std::string> known_backends();

// Run the identity checks selected by the config; one record per check.
Report run_suite(const SuiteConfig& cfg);

// Re-run the selected checks along a parameter axis ("N" or "d"); grid sizes
// beyond a check's pinned maximum are skipped (cost/memory guard).
Report convergence_sweep(const SuiteConfig& cfg, const std::string& axis,
                         const std::vector<int>& values);

} // namespace rieffel
