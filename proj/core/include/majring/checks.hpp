#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "majring/config.hpp"

namespace majring {

struct CheckResult {
    std::string name;
    bool passed = true;
    std::uint64_t cases = 0;  // individual assertions exercised
    std::string detail;       // first failure, or empty
};

struct CheckOptions {
    int radius = 1;
    int n_max = 10;            // exhaustive over all rings with n <= n_max
    int samples = 1000;        // seeded random instances per property
    std::uint64_t seed = 0;
    int random_n_max = 96;     // ring sizes drawn for random instances
};

// Runs every structural property of the rule engine, block machinery,
// stability classifier, alignment mappings, potential function, and
// enumeration routines over exhaustive small rings plus seeded random
// instances. Deterministic for fixed options.
std::vector<CheckResult> run_property_suite(const CheckOptions& opts);

} // namespace majring
