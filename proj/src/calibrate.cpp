#include "osgt/calibrate.hpp"

#include <cmath>
#include <functional>

#include "osgt/account.hpp"

namespace osgt::calibrate {

namespace {

// Bisection for the smallest eps with log_delta(eps) <= log_target.
// log_delta must be nonincreasing in eps.
double solve_eps(const std::function<double(double)>& log_delta, double target_delta) {
    if (!(target_delta > 0.0 && target_delta < 1.0)) {
        throw std::domain_error("calibration: target delta must lie in (0, 1)");
    }
    const double log_target = std::log(target_delta);
    if (log_delta(0.0) <= log_target) return 0.0;

    double lo = 0.0;
    double hi = 1.0;
    while (log_delta(hi) > log_target) {
        lo = hi;
        hi *= 2.0;
        if (hi > 1e6) {
            throw CalibrationError("epsilon_for_delta: bracket exceeded eps = 1e6");
        }
    }
    while (hi - lo > 1e-9 * hi) {
        const double mid = 0.5 * (lo + hi);
        if (log_delta(mid) > log_target) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace

Real epsilon_for_delta(const dist::OsgtParams& p, Real delta_q, Real target_delta) {
    return solve_eps(
        [&](double eps) { return account::osgt_delta(p, delta_q, eps).log_delta; },
        target_delta);
}

Real epsilon_for_delta_gaussian(Real sigma_g2, Real delta2, Real target_delta) {
    return solve_eps(
        [&](double eps) {
            return account::gaussian_delta(sigma_g2, delta2, eps).log_delta;
        },
        target_delta);
}

Real sigma2_for_target(Real m, Real delta_q, Real eps, Real target_delta) {
    if (!(target_delta > 0.0 && target_delta < 1.0)) {
        throw std::domain_error("sigma2_for_target: target delta must lie in (0, 1)");
    }
    if (!(m >= 0.0) || !(delta_q > 0.0) || !(eps >= 0.0)) {
        throw std::domain_error("sigma2_for_target: requires m >= 0, Delta > 0, eps >= 0");
    }
    auto log_delta = [&](double sigma2) {
        return account::osgt_delta(dist::OsgtParams(m, sigma2), delta_q, eps).log_delta;
    };
    const double log_target = std::log(target_delta);

    // Noise vanishing => mechanism nearly deterministic => delta -> 1, so a
    // small enough sigma2 sits above the target; expand upward until below.
    const double scale = (delta_q + m) * (delta_q + m);
    double lo = 1e-6 * scale;
    while (log_delta(lo) < log_target) {
        lo *= 0.25;
        if (lo < 1e-30 * scale) {
            throw CalibrationError("sigma2_for_target: no lower bracket (target too loose)");
        }
    }
    double hi = lo;
    while (log_delta(hi) > log_target) {
        hi *= 4.0;
        if (hi > 1e30 * scale) {
            throw CalibrationError("sigma2_for_target: no upper bracket (target too tight)");
        }
    }

    // Probe the bracket: delta must be nonincreasing in sigma2 here.
    double prev = log_delta(lo);
    for (int i = 1; i <= 4; ++i) {
        const double s2 = lo * std::pow(hi / lo, i / 4.0);
        const double cur = log_delta(s2);
        if (cur > prev + 1e-9) {
            throw CalibrationError(
                "sigma2_for_target: delta not monotone in sigma2 on the bracket");
        }
        prev = cur;
    }

    while (hi - lo > 1e-10 * hi) {
        const double mid = std::sqrt(lo * hi);
        if (log_delta(mid) > log_target) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return std::sqrt(lo * hi);
}

std::vector<ComparisonRow> compare_mechanisms(const dist::OsgtParams& p,
                                              const mech::Sensitivity& s,
                                              std::span<const Real> eps_grid) {
    s.validate();
    const double sigma_g2 = dist::matched_references(p).sigma_g2;
    std::vector<ComparisonRow> rows;
    rows.reserve(eps_grid.size());
    for (double eps : eps_grid) {
        account::PrivacyPoint t{};
        account::PrivacyPoint g{};
        if (s.k == 1) {
            t = account::osgt_delta(p, s.delta2, eps);
            g = account::gaussian_delta(sigma_g2, s.delta2, eps);
        } else {
            t = account::osgt_delta_via_renyi(p, s, eps);
            g = account::gaussian_delta_via_renyi(sigma_g2, s.delta2, eps);
        }
        rows.push_back({eps, t.delta, g.delta, std::exp(g.log_delta - t.log_delta)});
    }
    return rows;
}

}  // namespace osgt::calibrate
