#include "osgt/selftest.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <vector>

#include "osgt/account.hpp"
#include "osgt/batch.hpp"
#include "osgt/calibrate.hpp"
#include "osgt/dist.hpp"
#include "osgt/quadrature.hpp"
#include "osgt/special.hpp"

namespace osgt::selftest {

namespace sp = osgt::special;

namespace {

// Parameter tuples exercised throughout: the validated envelope plus the
// near-Gaussian corner.
const std::array<std::pair<double, double>, 4> tuples{
    {{3.0, 40.0}, {2.0, 20.0}, {15.0, 630.0}, {0.01, 1.0}}};

std::string format(const char* fmt, double a, double b = 0.0, double c = 0.0) {
    char buf[160];
    std::snprintf(buf, sizeof(buf), fmt, a, b, c);
    return buf;
}

// ---- fault injection --------------------------------------------------------
// A Q implementation whose relative error (~3e-7) depends erratically on the
// argument bits. Branch continuity needs 1e-12 consistency between Q values
// reached through different arithmetic, so this must trip the check.

double bit_noise(double x) {
    auto z = std::bit_cast<std::uint64_t>(x);
    z += 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    z = z ^ (z >> 31);
    return (static_cast<double>(z >> 11) * 0x1.0p-53) * 2.0 - 1.0;
}

double corrupted_q(double x) {
    return sp::q_function(x) * (1.0 + 3e-7 * bit_noise(x));
}

double corrupted_log_q(double x) {
    return sp::log_q_function(x) + std::log1p(3e-7 * bit_noise(x));
}

const account::QFunctions corrupted_q_functions{&corrupted_q, &corrupted_log_q};

// ---- check harness ----------------------------------------------------------

class Suite {
public:
    explicit Suite(const Options& opt) : opt_(opt) {}

    void check(const std::string& name, const std::function<std::pair<bool, std::string>()>& body) {
        const auto start = std::chrono::steady_clock::now();
        std::pair<bool, std::string> r;
        try {
            r = body();
        } catch (const std::exception& e) {
            r = {false, std::string("exception: ") + e.what()};
        }
        const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start;
        results_.push_back({name, r.first, dt.count(), r.second});
    }

    std::vector<CheckResult> take() { return std::move(results_); }
    const Options& opt() const { return opt_; }

private:
    Options opt_;
    std::vector<CheckResult> results_;
};

double worst_rel(double got, double want, double floor = 0.0) {
    return std::abs(got - want) / std::max({std::abs(want), floor, 1e-300});
}

}  // namespace

std::vector<CheckResult> run(const Options& options) {
    Suite suite(options);

    suite.check("q_symmetry", [] {
        double worst = 0.0;
        for (double x = -12.0; x <= 12.0; x += 0.0103) {
            worst = std::max(worst, std::abs(sp::q_function(x) + sp::q_function(-x) - 1.0));
        }
        return std::make_pair(worst <= 4.5e-16, format("max |Q(x)+Q(-x)-1| = %.3g", worst));
    });

    suite.check("q_log_consistency", [] {
        double worst = 0.0;
        for (double x = -40.0; x <= 40.0; x += 0.0517) {
            const double q = sp::q_function(x);
            if (q <= 0.0) continue;
            worst = std::max(worst, std::abs(std::exp(sp::log_q_function(x)) - q) / q);
        }
        return std::make_pair(worst <= 1e-12, format("max rel |exp(lnQ)-Q| = %.3g", worst));
    });

    suite.check("q_inverse_roundtrip", [] {
        double worst = 0.0;
        for (double lp = -12.0; lp <= -0.31; lp += 0.1) {
            for (double p : {std::pow(10.0, lp), 1.0 - std::pow(10.0, lp)}) {
                worst = std::max(worst, worst_rel(sp::q_function(sp::inverse_q(p)), p));
            }
        }
        return std::make_pair(worst <= 1e-10, format("max rel roundtrip err = %.3g", worst));
    });

    suite.check("q_chernoff_bound", [] {
        for (double x = 0.01; x <= 37.0; x += 0.093) {
            if (sp::q_function(x) > 0.5 * std::exp(-0.5 * x * x) * (1.0 + 1e-14)) {
                return std::make_pair(false, format("violated at x = %.4f", x));
            }
        }
        return std::make_pair(true, std::string("Q(x) <= exp(-x^2/2)/2 on grid"));
    });

    suite.check("pdf_normalization", [] {
        double worst = 0.0;
        for (double ratio : {0.01, 0.1, 0.4743, 0.6745, 1.0, 3.0}) {
            for (double sigma2 : {1.0, 40.0}) {
                const double sigma = std::sqrt(sigma2);
                dist::OsgtParams p(ratio * sigma, sigma2);
                const double lim = 50.0 * sigma + p.m();
                const std::array<double, 4> pts{-lim, 0.0, lim / 2, lim};
                auto res = quadrature::integrate(
                    [&](double y) { return dist::pdf(p, y); }, pts, 1e-12, 0.0);
                worst = std::max(worst, std::abs(res.value - 1.0));
            }
        }
        return std::make_pair(worst <= 1e-9, format("max |integral - 1| = %.3g", worst));
    });

    suite.check("cdf_matches_pdf", [] {
        double worst = 0.0;
        for (const auto& [m, s2] : tuples) {
            dist::OsgtParams p(m, s2);
            const double h = 1e-5 * p.sigma();
            for (double t = -4.0; t <= 4.0; t += 0.37) {
                const double y = t * p.sigma();
                if (std::abs(y) < 10 * h) continue;
                const double deriv = (dist::cdf(p, y + h) - dist::cdf(p, y - h)) / (2 * h);
                worst = std::max(worst, worst_rel(deriv, dist::pdf(p, y)));
            }
        }
        return std::make_pair(worst <= 1e-6, format("max rel |dF - f| = %.3g", worst));
    });

    suite.check("variance_quadrature", [] {
        double worst = 0.0;
        for (const auto& [m, s2] : tuples) {
            dist::OsgtParams p(m, s2);
            const double lim = 50.0 * p.sigma() + m;
            const std::array<double, 4> pts{-lim, 0.0, lim / 2, lim};
            auto res = quadrature::integrate(
                [&](double y) { return y * y * dist::pdf(p, y); }, pts, 1e-12, 0.0);
            worst = std::max(worst, worst_rel(res.value, dist::variance(p)));
        }
        return std::make_pair(worst <= 1e-8, format("max rel err = %.3g", worst));
    });

    suite.check("variance_below_sigma2", [] {
        for (const auto& [m, s2] : tuples) {
            if (!(dist::variance(dist::OsgtParams(m, s2)) < s2)) {
                return std::make_pair(false, format("V >= sigma2 at m=%.3g s2=%.3g", m, s2));
            }
        }
        return std::make_pair(true, std::string("V < sigma2 on all tuples"));
    });

    suite.check("sub_gaussian_tail", [] {
        for (const auto& [m, s2] : tuples) {
            dist::OsgtParams p(m, s2);
            if (!dist::is_sub_gaussian(p)) continue;
            for (int j = 1; j <= 8; ++j) {
                const double y = j * p.sigma();
                if (dist::log_survival(p, y) > -y * y / (2 * s2)) {
                    return std::make_pair(false,
                                          format("bound violated at m=%.3g y=%.3g", m, y));
                }
            }
        }
        return std::make_pair(true, std::string("survival <= exp(-y^2/2sigma^2)"));
    });

    suite.check("gaussian_limit_pdf", [] {
        dist::OsgtParams p(1e-8, 4.0);
        double worst = 0.0;
        for (double y = -10.0; y <= 10.0; y += 0.11) {
            worst = std::max(worst,
                             std::abs(dist::pdf(p, y) - dist::gaussian_pdf(4.0, y)));
        }
        return std::make_pair(worst <= 1e-8, format("max |pdf - N(0,s2)| = %.3g", worst));
    });

    const std::array<double, 3> deltas{0.5, 1.0, 2.0};

    suite.check("delta_oracle_agreement", [&] {
        double worst = 0.0;
        for (const auto& [m, s2] : tuples) {
            dist::OsgtParams p(m, s2);
            for (double dq : deltas) {
                const double eps_star = account::case_boundary(p, dq).eps_star;
                for (double eps : {0.1, 0.5, 1.0, eps_star, 2.0, 5.0}) {
                    const double exact = account::osgt_delta(p, dq, eps).delta;
                    const auto oracle = account::delta_quadrature(p, dq, eps);
                    const double err =
                        std::abs(exact - oracle.value) / std::max(exact, 1e-13);
                    worst = std::max(worst, err);
                }
            }
        }
        return std::make_pair(worst <= 1e-6, format("max scaled err = %.3g", worst));
    });

    suite.check("delta_branch_continuity", [&] {
        const account::QFunctions& qf = suite.opt().corrupt_q
                                            ? corrupted_q_functions
                                            : account::default_q_functions();
        double worst = 0.0;
        for (const auto& [m, s2] : tuples) {
            dist::OsgtParams p(m, s2);
            for (double dq : deltas) {
                const double eps_star = account::case_boundary(p, dq).eps_star;
                const double d1 = account::osgt_delta_branch1(p, dq, eps_star, qf);
                const double d2 = account::osgt_delta_branch2(p, dq, eps_star, qf);
                worst = std::max(worst, std::abs(d1 - d2));
            }
        }
        return std::make_pair(worst <= 1e-12, format("max |branch1-branch2| = %.3g", worst));
    });

    suite.check("delta_monotonicity", [&] {
        for (const auto& [m, s2] : tuples) {
            dist::OsgtParams p(m, s2);
            double prev = 2.0;
            for (double eps = 0.0; eps <= 6.0; eps += 0.01) {
                const double d = account::osgt_delta(p, 1.0, eps).delta;
                if (d > prev + 1e-15) {
                    return std::make_pair(false, format("not nonincreasing in eps at %.3f", eps));
                }
                prev = d;
            }
            prev = -1.0;
            for (double dq = 0.05; dq <= 3.0; dq += 0.05) {
                const double d = account::osgt_delta(p, dq, 1.0).delta;
                if (d < prev - 1e-15) {
                    return std::make_pair(false, format("not nondecreasing in Delta at %.3f", dq));
                }
                prev = d;
            }
        }
        return std::make_pair(true, std::string("monotone in eps and Delta"));
    });

    suite.check("delta_range", [&] {
        for (const auto& [m, s2] : tuples) {
            dist::OsgtParams p(m, s2);
            for (double dq : deltas) {
                for (double eps = 0.0; eps <= 8.0; eps += 0.13) {
                    const double d = account::osgt_delta(p, dq, eps).delta;
                    if (!(d >= 0.0 && d <= 1.0)) {
                        return std::make_pair(false, format("delta out of range: %.3g", d));
                    }
                }
            }
        }
        return std::make_pair(true, std::string("all delta in [0,1]"));
    });

    suite.check("renyi_closed_vs_quadrature", [&] {
        double worst = 0.0;
        for (const auto& [m, s2] : tuples) {
            dist::OsgtParams p(m, s2);
            for (double dq : deltas) {
                for (double alpha : {1.5, 2.0, 5.0, 10.0, 50.0}) {
                    const double closed = account::osgt_renyi_closed_form(p, dq, alpha).tau;
                    const double quad = account::renyi_quadrature(p, dq, alpha);
                    worst = std::max(worst, worst_rel(quad, closed));
                }
            }
        }
        return std::make_pair(worst <= 1e-8, format("max rel err = %.3g", worst));
    });

    suite.check("renyi_worst_case_endpoint", [&] {
        for (const auto& [m, s2] : tuples) {
            dist::OsgtParams p(m, s2);
            const auto wc = account::osgt_renyi_worst_case(p, 1.0, 10.0, 101);
            if (!wc.max_at_endpoint) {
                return std::make_pair(false, format("maximizer interior at m=%.3g", m));
            }
            for (std::size_t i = 1; i < wc.grid_taus.size(); ++i) {
                if (wc.grid_taus[i] + 1e-12 < wc.grid_taus[i - 1]) {
                    return std::make_pair(false, format("tau not nondecreasing at m=%.3g", m));
                }
            }
        }
        return std::make_pair(true, std::string("maximizer at endpoint, tau nondecreasing"));
    });

    suite.check("zcdp_dominates_renyi", [&] {
        for (const auto& [m, s2] : tuples) {
            dist::OsgtParams p(m, s2);
            for (int j = 0; j < 20; ++j) {
                const double alpha = 1.0 + std::pow(10.0, -2.0 + 4.0 * j / 19.0);
                if (alpha > 100.0) continue;
                const auto bound = account::osgt_zcdp(p, 1.0, 1, alpha);
                const auto wc = account::osgt_renyi_worst_case(p, 1.0, alpha, 51);
                if (bound.value() < wc.best.tau - 1e-12) {
                    return std::make_pair(
                        false, format("bound below exact at m=%.3g alpha=%.3g", m, alpha));
                }
            }
        }
        return std::make_pair(true, std::string("zeta + alpha rho >= exact Renyi"));
    });

    suite.check("zcdp_rho_ordering", [&] {
        for (const auto& [m, s2] : tuples) {
            dist::OsgtParams p(m, s2);
            const double rho_t = account::osgt_zcdp(p, 1.0, 1, 2.0).rho;
            const double rho_g = 1.0 / (2.0 * dist::matched_references(p).sigma_g2);
            if (!(rho_t < rho_g)) {
                return std::make_pair(false, format("rho ordering fails at m=%.3g", m));
            }
        }
        return std::make_pair(true, std::string("rho_osgt < rho_gaussian at matched variance"));
    });

    suite.check("gaussian_reduction", [&] {
        dist::OsgtParams p(1e-10, 9.0);
        double worst = 0.0;
        for (double eps : {0.1, 0.5, 1.0, 2.0, 4.0}) {
            const double t = account::osgt_delta(p, 1.0, eps).delta;
            const double g = account::gaussian_delta(9.0, 1.0, eps).delta;
            worst = std::max(worst, worst_rel(t, g));
        }
        return std::make_pair(worst <= 1e-6, format("max rel gap = %.3g", worst));
    });

    suite.check("conversion_upper_bounds_exact", [&] {
        dist::OsgtParams p(3.0, 40.0);
        const double sg2 = dist::matched_references(p).sigma_g2;
        for (double eps = 0.2; eps <= 3.0; eps += 0.2) {
            const double conv = account::gaussian_delta_via_renyi(sg2, 1.0, eps).log_delta;
            const double exact = account::gaussian_delta(sg2, 1.0, eps).log_delta;
            if (conv < exact - 1e-9) {
                return std::make_pair(false, format("conversion below exact at eps=%.2f", eps));
            }
        }
        return std::make_pair(true, std::string("conversion >= exact Gaussian delta"));
    });

    // ---- sampler checks ----
    const Options& opt = suite.opt();
    dist::OsgtParams p34(3.0, 40.0);

    suite.check("sampler_ks", [&] {
        const double critical =
            std::sqrt(std::log(200.0) / 2.0) / std::sqrt(static_cast<double>(opt.sample_count));
        int passes = 0;
        double worst = 0.0;
        for (int s = 0; s < opt.ks_seeds; ++s) {
            auto stats = batch::sample_osgt(p34, opt.sample_count, opt.seed + s);
            std::sort(stats.values.begin(), stats.values.end());
            const double n = static_cast<double>(stats.values.size());
            double d = 0.0;
            for (std::size_t i = 0; i < stats.values.size(); ++i) {
                const double f = dist::cdf(p34, stats.values[i]);
                d = std::max(d, std::max((i + 1) / n - f, f - i / n));
            }
            worst = std::max(worst, d);
            if (d < critical) ++passes;
        }
        return std::make_pair(passes >= opt.ks_seeds - 1,
                              format("%.0f/%.0f below critical; worst D = %.3g",
                                     static_cast<double>(passes),
                                     static_cast<double>(opt.ks_seeds), worst));
    });

    suite.check("sampler_acceptance_rate", [&] {
        auto stats = batch::sample_osgt(p34, opt.sample_count, opt.seed);
        const double n = static_cast<double>(opt.sample_count);
        const double rate = n / static_cast<double>(stats.trials);
        const double expect = 2.0 * sp::q_function(p34.m() / p34.sigma());
        const double se = expect * std::sqrt((1.0 - expect) / n);
        return std::make_pair(std::abs(rate - expect) <= 3.0 * se,
                              format("rate %.6f vs %.6f (3se = %.2g)", rate, expect, 3 * se));
    });

    suite.check("sampler_variance", [&] {
        auto stats = batch::sample_osgt(p34, opt.sample_count, opt.seed);
        double sum = 0.0;
        double sum2 = 0.0;
        for (double v : stats.values) {
            sum += v;
            sum2 += v * v;
        }
        const double n = static_cast<double>(stats.values.size());
        const double var = sum2 / n - (sum / n) * (sum / n);
        const double rel = worst_rel(var, dist::variance(p34));
        return std::make_pair(rel <= 0.01, format("empirical var rel err = %.4f", rel));
    });

    suite.check("calibration_roundtrip", [&] {
        double worst = 0.0;
        for (const auto& [m, s2] : tuples) {
            dist::OsgtParams p(m, s2);
            for (double eps0 : {0.3, 1.0, 2.5}) {
                const double d0 = account::osgt_delta(p, 1.0, eps0).delta;
                if (d0 <= 0.0 || d0 >= 1.0) continue;
                const double eps = calibrate::epsilon_for_delta(p, 1.0, d0);
                worst = std::max(worst, worst_rel(account::osgt_delta(p, 1.0, eps).delta, d0));
            }
        }
        return std::make_pair(worst <= 1e-6, format("max rel err = %.3g", worst));
    });

    return suite.take();
}

bool all_passed(const std::vector<CheckResult>& results) {
    return std::all_of(results.begin(), results.end(),
                       [](const CheckResult& r) { return r.passed; });
}

}  // namespace osgt::selftest
