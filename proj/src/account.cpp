#include "osgt/account.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "osgt/batch.hpp"
#include "osgt/quadrature.hpp"
#include "osgt/special.hpp"

namespace osgt::account {

namespace sp = osgt::special;

namespace {

constexpr double neg_inf = -std::numeric_limits<double>::infinity();

void require(bool ok, const char* msg) {
    if (!ok) throw std::domain_error(msg);
}

double clamp_unit(double delta) {
    constexpr double slack = 1e-12;
    if (delta < 0.0) {
        if (delta < -slack) {
            throw std::logic_error("delta evaluated below 0 beyond rounding slack");
        }
        return 0.0;
    }
    if (delta > 1.0) {
        if (delta > 1.0 + slack) {
            throw std::logic_error("delta evaluated above 1 beyond rounding slack");
        }
        return 1.0;
    }
    return delta;
}

// Golden-section refinement of a unimodal-ish objective after a coarse grid.
template <typename F>
std::pair<double, double> minimize_alpha(F&& objective) {
    constexpr int grid_n = 200;
    const double lo = 1e-6;   // alpha - 1 lower end
    const double hi = 1e4 - 1.0;
    const double llo = std::log(lo);
    const double lhi = std::log(hi);

    double best_alpha = 1.0 + lo;
    double best_value = std::numeric_limits<double>::infinity();
    std::array<double, grid_n> alphas{};
    for (int i = 0; i < grid_n; ++i) {
        const double a = 1.0 + std::exp(llo + (lhi - llo) * i / (grid_n - 1));
        alphas[i] = a;
        const double v = objective(a);
        if (v < best_value) {
            best_value = v;
            best_alpha = a;
        }
    }

    // Bracket around the grid winner, then golden-section to rel 1e-10.
    auto it = std::find(alphas.begin(), alphas.end(), best_alpha);
    const std::size_t idx = static_cast<std::size_t>(it - alphas.begin());
    double a = alphas[idx > 0 ? idx - 1 : 0];
    double b = alphas[idx + 1 < alphas.size() ? idx + 1 : alphas.size() - 1];
    if (a < b) {
        constexpr double inv_phi = 0.6180339887498949;
        double c = b - inv_phi * (b - a);
        double d = a + inv_phi * (b - a);
        double fc = objective(c);
        double fd = objective(d);
        while (b - a > 1e-10 * b) {
            if (fc < fd) {
                b = d;
                d = c;
                fd = fc;
                c = b - inv_phi * (b - a);
                fc = objective(c);
            } else {
                a = c;
                c = d;
                fc = fd;
                d = a + inv_phi * (b - a);
                fd = objective(d);
            }
        }
        const double mid = 0.5 * (a + b);
        const double fmid = objective(mid);
        if (fmid < best_value) {
            best_value = fmid;
            best_alpha = mid;
        }
    }
    return {best_alpha, best_value};
}

PrivacyPoint point_from_log(double eps, double log_delta, DeltaSource source) {
    double delta = std::exp(std::min(log_delta, 0.0));
    if (log_delta > 0.0) delta = 1.0;
    return {eps, clamp_unit(delta), std::min(log_delta, 0.0), source};
}

}  // namespace

const QFunctions& default_q_functions() noexcept {
    static const QFunctions qf{&sp::q_function, &sp::log_q_function};
    return qf;
}

CaseBoundary case_boundary(const dist::OsgtParams& p, Real delta_q) {
    require(delta_q > 0.0, "case_boundary: Delta must be > 0");
    return {(delta_q * delta_q + 2.0 * p.m() * delta_q) / (2.0 * p.sigma2())};
}

Real osgt_delta_branch1(const dist::OsgtParams& p, Real delta_q, Real eps,
                        const QFunctions& qf) {
    require(delta_q > 0.0, "osgt_delta: Delta must be > 0");
    require(eps >= 0.0, "osgt_delta: eps must be >= 0");
    const double inv_2b = (2.0 * p.m() + delta_q) / (2.0 * p.sigma());
    const double b_eps = eps * p.sigma() / (2.0 * p.m() + delta_q);
    const double two_q = 2.0 * qf.q(p.m() / p.sigma());
    const double head = qf.q(inv_2b - b_eps);
    const double tail = std::exp(eps + qf.log_q(inv_2b + b_eps));
    return 1.0 - (head + tail) / two_q;
}

Real osgt_delta_branch2(const dist::OsgtParams& p, Real delta_q, Real eps,
                        const QFunctions& qf) {
    require(delta_q > 0.0, "osgt_delta: Delta must be > 0");
    require(eps >= 0.0, "osgt_delta: eps must be >= 0");
    const double a_eps = eps * p.sigma() / delta_q;
    const double inv_2a = delta_q / (2.0 * p.sigma());
    const double l1 = qf.log_q(a_eps - inv_2a);
    const double l2 = eps + qf.log_q(a_eps + inv_2a);
    const double log_two_q = sp::ln2 + qf.log_q(p.m() / p.sigma());
    const double diff = l2 - l1;  // < 0 in exact arithmetic
    const double log_delta =
        l1 + (diff < 0.0 ? std::log1p(-std::exp(diff)) : neg_inf) - log_two_q;
    return std::exp(log_delta);
}

PrivacyPoint osgt_delta(const dist::OsgtParams& p, Real delta_q, Real eps) {
    require(delta_q > 0.0, "osgt_delta: Delta must be > 0");
    require(eps >= 0.0 && std::isfinite(eps), "osgt_delta: eps must be finite and >= 0");
    const bool small_eps = p.sigma2() * eps / delta_q <= delta_q / 2.0 + p.m();
    const double delta = small_eps ? osgt_delta_branch1(p, delta_q, eps)
                                   : osgt_delta_branch2(p, delta_q, eps);
    const double clamped = clamp_unit(delta);
    const double log_delta = clamped > 0.0 ? std::log(clamped) : neg_inf;
    return {eps, clamped, log_delta, DeltaSource::exact_theorem1};
}

PrivacyPoint gaussian_delta(Real sigma_g2, Real delta2, Real eps) {
    require(sigma_g2 > 0.0, "gaussian_delta: sigma_g2 must be > 0");
    require(delta2 > 0.0, "gaussian_delta: Delta2 must be > 0");
    require(eps >= 0.0 && std::isfinite(eps), "gaussian_delta: eps must be finite and >= 0");
    const double sg = std::sqrt(sigma_g2);
    const double x1 = sg * eps / delta2 - delta2 / (2.0 * sg);
    const double x2 = sg * eps / delta2 + delta2 / (2.0 * sg);
    double delta;
    double log_delta;
    if (x1 >= 0.0) {
        const double l1 = sp::log_q_function(x1);
        const double diff = eps + sp::log_q_function(x2) - l1;
        log_delta = l1 + (diff < 0.0 ? std::log1p(-std::exp(diff)) : neg_inf);
        delta = std::exp(log_delta);
    } else {
        delta = sp::q_function(x1) - std::exp(eps + sp::log_q_function(x2));
        delta = clamp_unit(delta);
        log_delta = delta > 0.0 ? std::log(delta) : neg_inf;
    }
    return {eps, clamp_unit(delta), log_delta, DeltaSource::gaussian_analytic};
}

ZcdpBound osgt_zcdp(const dist::OsgtParams& p, Real delta2, int k, Real alpha) {
    require(alpha > 1.0, "osgt_zcdp: alpha must be > 1");
    require(delta2 > 0.0, "osgt_zcdp: Delta2 must be > 0");
    require(k >= 1, "osgt_zcdp: k must be >= 1");
    const double r = p.m() / p.sigma();
    const double rho = delta2 * delta2 / (2.0 * p.sigma2());
    // ln((1 - Q(r))/Q(r)) = ln Q(-r) - ln Q(r); exactly 0 at m = 0.
    const double zeta =
        k / (alpha - 1.0) * (sp::log_q_function(-r) - sp::log_q_function(r));
    return {zeta, rho, k, alpha};
}

RenyiEvaluation osgt_renyi_closed_form(const dist::OsgtParams& p, Real delta_qq,
                                       Real alpha) {
    require(alpha > 1.0, "osgt_renyi: alpha must be > 1");
    require(delta_qq >= 0.0, "osgt_renyi: Delta_qq must be >= 0");
    const double m = p.m();
    const double s = p.sigma();
    const double s2 = p.sigma2();
    const double d = delta_qq;

    RenyiEvaluation ev;
    ev.alpha = alpha;
    ev.delta_qq = d;
    ev.b1 = -m + (alpha - 1.0) * d;
    ev.b2 = -m - alpha * d;
    ev.b3 = alpha * d - m * (1.0 - 2.0 * alpha);
    ev.b4 = ev.b3 - d;
    ev.log_a_factor = alpha * (alpha - 1.0) * (4.0 * m * d + 4.0 * m * m) / (2.0 * s2);

    // B-bar = Phi(b1/s) + Phi(b2/s) + A (Phi(b3/s) - Phi(b4/s)); Phi(x) = Q(-x)
    // and the A-term goes through the stable log Q-difference.
    const double t1 = sp::log_q_function(-ev.b1 / s);
    const double t2 = sp::log_q_function(-ev.b2 / s);
    const double t3 = d > 0.0
                          ? ev.log_a_factor + sp::log_q_difference(ev.b4 / s, ev.b3 / s)
                          : neg_inf;
    const std::array<double, 3> terms{t1, t2, t3};
    ev.log_b_bar = sp::log_sum_exp(terms);
    ev.tau = alpha * d * d / (2.0 * s2) +
             (ev.log_b_bar - p.log_two_q()) / (alpha - 1.0);
    return ev;
}

WorstCaseRenyi osgt_renyi_worst_case(const dist::OsgtParams& p, Real delta_max,
                                     Real alpha, int grid_n) {
    require(grid_n >= 2, "osgt_renyi_worst_case: grid_n must be >= 2");
    require(delta_max > 0.0, "osgt_renyi_worst_case: delta_max must be > 0");
    WorstCaseRenyi wc;
    wc.grid_taus = batch::renyi_tau_grid(p, delta_max, alpha, grid_n);
    std::size_t arg = 0;
    for (std::size_t i = 1; i < wc.grid_taus.size(); ++i) {
        if (wc.grid_taus[i] > wc.grid_taus[arg]) arg = i;
    }
    const double d_best = delta_max * static_cast<double>(arg) / (grid_n - 1);
    wc.best = osgt_renyi_closed_form(p, d_best, alpha);
    wc.max_at_endpoint = (arg + 1 == wc.grid_taus.size());
    return wc;
}

RenyiEvaluation osgt_renyi_k_dim(const dist::OsgtParams& p,
                                 const mech::Sensitivity& s, Real alpha) {
    s.validate();
    require(s.per_coord.has_value(), "osgt_renyi_k_dim: per_coord sensitivity unset");
    require(alpha > 1.0, "osgt_renyi_k_dim: alpha must be > 1");
    RenyiEvaluation ev = osgt_renyi_closed_form(p, *s.per_coord, alpha);
    ev.tau = alpha * s.delta2 * s.delta2 / (2.0 * p.sigma2()) +
             s.k * (ev.log_b_bar - p.log_two_q()) / (alpha - 1.0);
    return ev;
}

Real privacy_loss_crossover(const dist::OsgtParams& p, Real delta_qq, Real eps) {
    require(delta_qq > 0.0, "privacy_loss_crossover: Delta_qq must be > 0");
    require(eps >= 0.0, "privacy_loss_crossover: eps must be >= 0");
    const double qbar = 0.5 * delta_qq;  // locations q = 0, q' = delta_qq
    if (eps == 0.0) return qbar;
    // The loss is decreasing with l(qbar) = 0 < eps; expand left until it
    // exceeds eps, then bisect.
    double hi = qbar;
    double step = p.sigma();
    double lo = qbar - step;
    while (mech::privacy_loss(p, 0.0, delta_qq, lo) < eps) {
        step *= 2.0;
        lo -= step;
        if (step > 1e12 * p.sigma()) {
            throw std::runtime_error("privacy_loss_crossover: no crossover found");
        }
    }
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        if (mech::privacy_loss(p, 0.0, delta_qq, mid) >= eps) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

DeltaOracle delta_quadrature(const dist::OsgtParams& p, Real delta_qq, Real eps) {
    require(delta_qq >= 0.0, "delta_quadrature: Delta_qq must be >= 0");
    require(eps >= 0.0, "delta_quadrature: eps must be >= 0");
    constexpr double floor = 1e-13;
    if (delta_qq == 0.0) return {0.0, true, true};

    const double y_star = privacy_loss_crossover(p, delta_qq, eps);
    const double lower = std::min(0.0, y_star) - 50.0 * p.sigma() - 2.0 * p.m();

    // f_q(y) - e^eps f_q'(y) = f_q(y) (1 - exp(eps - l(y))), nonnegative on
    // the integration region by construction of y*.
    auto integrand = [&](double y) {
        const double loss = mech::privacy_loss(p, 0.0, delta_qq, y);
        return -std::exp(dist::log_pdf(p, y)) * std::expm1(eps - loss);
    };

    std::vector<double> points{lower};
    if (lower < 0.0 && 0.0 < y_star) points.push_back(0.0);
    points.push_back(y_star);

    const auto res = quadrature::integrate(integrand, points, 1e-10, 1e-300);
    const double value = std::max(res.value, 0.0);
    return {value, value < floor, res.converged};
}

Real renyi_quadrature(const dist::OsgtParams& p, Real delta_qq, Real alpha) {
    require(alpha > 1.0, "renyi_quadrature: alpha must be > 1");
    require(delta_qq >= 0.0, "renyi_quadrature: Delta_qq must be >= 0");
    if (delta_qq == 0.0) return 0.0;

    const double d = delta_qq;  // locations q = 0, q' = d
    auto log_integrand = [&](double y) {
        return alpha * dist::log_pdf(p, y) + (1.0 - alpha) * dist::log_pdf(p, y - d);
    };

    // The log-integrand is piecewise concave quadratic with kinks at 0 and d;
    // per-piece vertices are y = sum_j w_j (c_j - m s_j).
    const double m = p.m();
    const double v_left = alpha * m + (1.0 - alpha) * (d + m);
    const double v_mid = -alpha * m + (1.0 - alpha) * (d + m);
    const double v_right = -alpha * m + (1.0 - alpha) * (d - m);

    auto clamp = [](double x, double lo, double hi) {
        return std::min(std::max(x, lo), hi);
    };
    const double span = 50.0 * p.sigma();
    const double lo = std::min({0.0, v_left}) - span;
    const double hi = std::max({d, v_right}) + span;

    std::vector<double> candidates{clamp(v_left, lo, 0.0), 0.0,
                                   clamp(v_mid, 0.0, d), d,
                                   clamp(v_right, d, hi)};
    double g_max = neg_inf;
    for (double y : candidates) g_max = std::max(g_max, log_integrand(y));

    std::vector<double> points{lo};
    for (double y : candidates) {
        if (y > points.back()) points.push_back(y);
    }
    if (hi > points.back()) points.push_back(hi);

    auto shifted = [&](double y) { return std::exp(log_integrand(y) - g_max); };
    const auto res = quadrature::integrate(shifted, points, 1e-12, 1e-300);
    if (!res.converged) {
        throw std::runtime_error("renyi_quadrature: refinement stalled");
    }
    return (g_max + std::log(res.value)) / (alpha - 1.0);
}

Real renyi_to_delta(Real tau, Real alpha, Real eps) {
    require(alpha > 1.0, "renyi_to_delta: alpha must be > 1");
    const double log_delta = (alpha - 1.0) * (tau - eps) +
                             alpha * std::log1p(-1.0 / alpha) -
                             std::log(alpha - 1.0);
    return log_delta >= 0.0 ? 1.0 : std::exp(log_delta);
}

PrivacyPoint osgt_delta_via_renyi(const dist::OsgtParams& p,
                                  const mech::Sensitivity& s, Real eps) {
    s.validate();
    require(s.per_coord.has_value(), "osgt_delta_via_renyi: per_coord sensitivity unset");
    require(eps >= 0.0, "osgt_delta_via_renyi: eps must be >= 0");
    auto objective = [&](double alpha) {
        const RenyiEvaluation ev = osgt_renyi_k_dim(p, s, alpha);
        return (alpha - 1.0) * (ev.tau - eps) + alpha * std::log1p(-1.0 / alpha) -
               std::log(alpha - 1.0);
    };
    const auto [alpha, log_delta] = minimize_alpha(objective);
    (void)alpha;
    return point_from_log(eps, log_delta, DeltaSource::renyi_conversion);
}

PrivacyPoint gaussian_delta_via_renyi(Real sigma_g2, Real delta2, Real eps) {
    require(sigma_g2 > 0.0, "gaussian_delta_via_renyi: sigma_g2 must be > 0");
    require(delta2 > 0.0, "gaussian_delta_via_renyi: Delta2 must be > 0");
    require(eps >= 0.0, "gaussian_delta_via_renyi: eps must be >= 0");
    const double rho = delta2 * delta2 / (2.0 * sigma_g2);
    auto objective = [&](double alpha) {
        return (alpha - 1.0) * (alpha * rho - eps) +
               alpha * std::log1p(-1.0 / alpha) - std::log(alpha - 1.0);
    };
    const auto [alpha, log_delta] = minimize_alpha(objective);
    (void)alpha;
    return point_from_log(eps, log_delta, DeltaSource::renyi_conversion);
}

}  // namespace osgt::account
