#include "osgt/dist.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "osgt/special.hpp"

namespace osgt::dist {

namespace sp = osgt::special;

OsgtParams::OsgtParams(Real m, Real sigma2) : m_(m), sigma2_(sigma2) {
    if (!std::isfinite(m) || m < 0.0) {
        throw std::invalid_argument("OsgtParams: m must be finite and >= 0");
    }
    if (!std::isfinite(sigma2) || sigma2 <= 0.0) {
        throw std::invalid_argument("OsgtParams: sigma2 must be finite and > 0");
    }
    sigma_ = std::sqrt(sigma2);
    const double r = m_ / sigma_;
    log_two_q_ = sp::ln2 + sp::log_q_function(r);
    log_s_ = sp::log_sqrt_2pi + std::log(sigma_) + log_two_q_;
    log_s_prime_ = 0.5 * r * r + log_s_;
    s_ = std::exp(log_s_);
    s_prime_ = std::exp(log_s_prime_);
}

LogProb log_pdf(const OsgtParams& p, Real y) noexcept {
    const double s2 = p.sigma2();
    return -y * y / (2.0 * s2) - p.m() * std::abs(y) / s2 - p.log_s_prime();
}

Real pdf(const OsgtParams& p, Real y) noexcept { return std::exp(log_pdf(p, y)); }

Real cdf(const OsgtParams& p, Real y) noexcept {
    if (y <= 0.0) {
        return std::exp(sp::log_q_function((p.m() - y) / p.sigma()) - p.log_two_q());
    }
    return 1.0 - std::exp(sp::log_q_function((p.m() + y) / p.sigma()) - p.log_two_q());
}

LogProb log_survival(const OsgtParams& p, Real y) noexcept {
    if (y > 0.0) {
        return sp::log_q_function((p.m() + y) / p.sigma()) - p.log_two_q();
    }
    const double lcdf = sp::log_q_function((p.m() - y) / p.sigma()) - p.log_two_q();
    return std::log1p(-std::exp(lcdf));
}

Real survival(const OsgtParams& p, Real y) noexcept {
    if (y > 0.0) return std::exp(log_survival(p, y));
    return 1.0 - cdf(p, y);
}

Real quantile(const OsgtParams& p, Real prob) {
    if (!(prob > 0.0 && prob < 1.0)) {
        throw std::domain_error("quantile: probability must lie in (0, 1)");
    }
    const double q_ms = sp::q_function(p.m() / p.sigma());
    if (prob <= 0.5) {
        return p.m() - p.sigma() * sp::inverse_q(2.0 * prob * q_ms);
    }
    return p.sigma() * sp::inverse_q(2.0 * (1.0 - prob) * q_ms) - p.m();
}

Real variance(const OsgtParams& p) noexcept {
    const double m = p.m();
    if (m == 0.0) return p.sigma2();
    const double s = p.sigma();
    const double r = m / s;
    // m s exp(-r^2/2) / (sqrt(2 pi) Q(r)) assembled in log space so large
    // ratios m/sigma do not underflow the numerator.
    const double correction =
        m * s * std::exp(-0.5 * r * r - sp::log_sqrt_2pi - sp::log_q_function(r));
    return p.sigma2() + m * m - correction;
}

bool is_sub_gaussian(const OsgtParams& p) {
    return p.m() / p.sigma() <= sp::inverse_q(0.25);
}

Real sample(const OsgtParams& p, rng::Stream& stream, std::uint64_t& trials) {
    constexpr std::uint64_t cap = 1000000000ull;
    for (std::uint64_t t = 0; t < cap; ++t) {
        ++trials;
        const double g = p.sigma() * stream.next_standard_normal();
        if (std::abs(g) >= p.m()) {
            return g >= 0.0 ? g - p.m() : g + p.m();
        }
    }
    throw std::runtime_error(
        "osgt sample: rejection cap reached; random source is broken");
}

Real sample(const OsgtParams& p, rng::Stream& stream) {
    std::uint64_t trials = 0;
    return sample(p, stream, trials);
}

MatchedReferences matched_references(const OsgtParams& p) {
    const double v = variance(p);
    return {v, std::sqrt(0.5 * v)};
}

Real gaussian_pdf(Real sigma2, Real y) noexcept {
    const double s = std::sqrt(sigma2);
    return sp::normal_pdf(y / s) / s;
}

LogProb gaussian_log_survival(Real sigma2, Real y) noexcept {
    return sp::log_q_function(y / std::sqrt(sigma2));
}

Real laplace_pdf(Real lambda, Real y) noexcept {
    return std::exp(-std::abs(y) / lambda) / (2.0 * lambda);
}

LogProb laplace_log_survival(Real lambda, Real y) noexcept {
    if (y >= 0.0) return -y / lambda - sp::ln2;
    return std::log1p(-0.5 * std::exp(y / lambda));
}

TailVerdict survival_ratio_scan(const OsgtParams& p, Reference ref,
                                std::span<const Real> grid) {
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (grid[i] <= 0.0 || (i > 0 && grid[i] <= grid[i - 1])) {
            throw std::invalid_argument(
                "survival_ratio_scan: grid must be positive and strictly increasing");
        }
    }
    const MatchedReferences match = matched_references(p);
    TailVerdict verdict;
    verdict.ratio_samples.reserve(grid.size());
    for (double y : grid) {
        double log_ratio;
        switch (ref) {
            case Reference::gaussian:
                log_ratio = log_survival(p, y) - gaussian_log_survival(match.sigma_g2, y);
                break;
            case Reference::laplace:
                log_ratio = laplace_log_survival(match.lambda, y) - log_survival(p, y);
                break;
            default:
                log_ratio = 0.0;
        }
        verdict.ratio_samples.emplace_back(y, std::exp(log_ratio));
    }
    // Longest strictly-increasing suffix of the ratios.
    std::size_t start = verdict.ratio_samples.size();
    for (std::size_t i = verdict.ratio_samples.size(); i-- > 0;) {
        if (i + 1 < verdict.ratio_samples.size() &&
            !(verdict.ratio_samples[i].second < verdict.ratio_samples[i + 1].second)) {
            break;
        }
        start = i;
    }
    if (start + 1 < verdict.ratio_samples.size()) {
        verdict.y0 = verdict.ratio_samples[start].first;
    } else {
        verdict.y0 = std::numeric_limits<double>::quiet_NaN();
    }
    return verdict;
}

}  // namespace osgt::dist
