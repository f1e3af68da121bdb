#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "osgt/dist.hpp"
#include "osgt/types.hpp"

namespace osgt::batch {

/// Execution policy for the data-parallel kernels. Every kernel has a serial
/// reference path that produces bitwise-identical results; tests compare the
/// two and the benchmark tool times them against each other.
enum class Execution { serial, parallel };

struct SampleStats {
    std::vector<Real> values;
    std::uint64_t trials = 0;  ///< total normal draws across all samples
};

/// n independent OSGT draws. Sample i consumes its own counter-based stream
/// (seed, i), so the output does not depend on the schedule or thread count.
SampleStats sample_osgt(const dist::OsgtParams& p, std::size_t n,
                        std::uint64_t seed, Execution exec = Execution::parallel);

/// tau over a uniform grid of location distances in [0, delta_max]
/// (grid_n points, endpoints included).
std::vector<Real> renyi_tau_grid(const dist::OsgtParams& p, Real delta_max,
                                 Real alpha, int grid_n,
                                 Execution exec = Execution::parallel);

/// ln delta(eps) of the exact 1-D formula over an epsilon grid.
std::vector<Real> log_delta_curve(const dist::OsgtParams& p, Real delta_q,
                                  std::span<const Real> eps,
                                  Execution exec = Execution::parallel);

}  // namespace osgt::batch
