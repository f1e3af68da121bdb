#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace osgt::selftest {

struct Options {
    std::uint64_t seed = 20240801;
    std::size_t sample_count = 1000000;  ///< draws per KS run
    int ks_seeds = 5;                    ///< seed sweep size; >= ks_seeds-1 must pass
    bool corrupt_q = false;              ///< fault injection: erratic Q in the
                                         ///< branch-continuity check
};

struct CheckResult {
    std::string name;
    bool passed;
    double seconds;
    std::string detail;
};

/// Runs the oracle-equivalence and invariant suite. Pure apart from the
/// declared RNG seeding; deterministic for fixed Options.
std::vector<CheckResult> run(const Options& options = {});

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace osgt::selftest
