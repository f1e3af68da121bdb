#pragma once

#include <span>
#include <stdexcept>
#include <vector>

#include "osgt/dist.hpp"
#include "osgt/mech.hpp"
#include "osgt/types.hpp"

namespace osgt::calibrate {

/// Raised when an inverse problem cannot be solved: the bracket expansion hit
/// its cap, or delta turned out non-monotone on the bracket (a parameter
/// regime outside the validated envelope).
struct CalibrationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Smallest epsilon whose exact OSGT delta is <= target_delta, by bisection
/// on the (monotone decreasing) log delta; relative tolerance 1e-9 in eps.
/// Returns 0 when even delta(0) meets the target.
Real epsilon_for_delta(const dist::OsgtParams& p, Real delta_q, Real target_delta);

/// Same inverse problem for the analytic Gaussian mechanism.
Real epsilon_for_delta_gaussian(Real sigma_g2, Real delta2, Real target_delta);

/// Solves delta(m, sigma2, delta_q, eps) = target_delta for sigma2 at fixed m.
/// Monotonicity of delta in sigma2 is probed on the bracket before bisecting;
/// a non-monotone bracket raises CalibrationError instead of returning a root
/// of unknown meaning.
Real sigma2_for_target(Real m, Real delta_q, Real eps, Real target_delta);

struct ComparisonRow {
    Real eps;
    Real delta_osgt;
    Real delta_gaussian;
    Real ratio;  ///< delta_gaussian / delta_osgt; > 1 favors the OSGT mechanism
};

/// delta(eps) of the OSGT mechanism versus the matched-variance Gaussian over
/// an epsilon grid: exact formulas for k = 1, the Renyi conversion route for
/// k > 1.
std::vector<ComparisonRow> compare_mechanisms(const dist::OsgtParams& p,
                                              const mech::Sensitivity& s,
                                              std::span<const Real> eps_grid);

}  // namespace osgt::calibrate
