#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace rackh {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = true;
    std::string detail;  // deterministic summary or first failure
    double seconds = 0;  // wall time; reported to the console, never serialized
    double budget = 0;   // soft limit in seconds, 0 = none
};

struct AcceptanceReport {
    std::uint64_t seed = 1;
    std::vector<CriterionResult> results;
    bool all_pass = true;
    std::string canonical_json; // byte-stable for a fixed seed
};

// Criteria 1..9 run once, then a second full pass whose canonical serialization
// must match the first byte for byte (criterion 10).
AcceptanceReport run_acceptance(std::uint64_t seed);

} // namespace rackh
