// Acceptance gate: one line per criterion, nonzero exit if any fails or
// overruns its runtime budget.  The canonical report itself carries no timings.

#include "rackh/acceptance.hpp"

#include <cstdio>
#include <cstdlib>

int main(int argc, char **argv) {
    std::uint64_t seed = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 1;
    rackh::AcceptanceReport rep = rackh::run_acceptance(seed);
    bool ok = true;
    for (const rackh::CriterionResult &r : rep.results) {
        bool in_budget = r.budget == 0 || r.seconds <= r.budget;
        bool pass = r.pass && in_budget;
        ok = ok && pass;
        std::printf("[%s] criterion %d: %s — %s (%.2fs%s)\n", pass ? "PASS" : "FAIL", r.id,
                    r.name.c_str(), r.detail.c_str(), r.seconds, in_budget ? "" : ", over budget");
    }
    std::printf("%s\n", ok ? "acceptance: all criteria pass" : "acceptance: FAILURES above");
    return ok ? 0 : 1;
}
