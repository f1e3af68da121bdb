#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "osgt/rng.hpp"
#include "osgt/types.hpp"

namespace osgt::dist {

/// Input parameters (m, sigma^2) of the offset-symmetric Gaussian-tails law,
/// plus the cached normalizers
///   S  = 2 sqrt(2 pi sigma^2) Q(m/sigma)
///   S' = exp(m^2 / (2 sigma^2)) S
/// in both linear and log form. m and sigma^2 are inputs, not moments: the
/// distribution has mean 0 and variance V(m, sigma^2) < sigma^2.
///
/// m = 0 is accepted and reproduces N(0, sigma^2) exactly. m < 0 or
/// sigma^2 <= 0 throw std::invalid_argument. Immutable after construction.
class OsgtParams {
public:
    OsgtParams(Real m, Real sigma2);

    Real m() const noexcept { return m_; }
    Real sigma2() const noexcept { return sigma2_; }
    Real sigma() const noexcept { return sigma_; }
    Real s() const noexcept { return s_; }
    Real s_prime() const noexcept { return s_prime_; }
    LogProb log_s() const noexcept { return log_s_; }
    LogProb log_s_prime() const noexcept { return log_s_prime_; }
    /// ln(2 Q(m/sigma)), the normalizer of every accounting formula.
    double log_two_q() const noexcept { return log_two_q_; }

private:
    Real m_, sigma2_, sigma_;
    Real s_, s_prime_;
    double log_s_, log_s_prime_, log_two_q_;
};

Real pdf(const OsgtParams& p, Real y) noexcept;
LogProb log_pdf(const OsgtParams& p, Real y) noexcept;

/// Piecewise cdf: Q((m-y)/s) / (2Q(m/s)) for y <= 0, the mirror image above.
/// Continuous at 0 (both one-sided limits are exactly 0.5).
Real cdf(const OsgtParams& p, Real y) noexcept;

Real survival(const OsgtParams& p, Real y) noexcept;
LogProb log_survival(const OsgtParams& p, Real y) noexcept;

/// Inverse cdf. Exact-sampling is done by rejection instead; this exists for
/// distribution tests. Throws std::domain_error outside (0,1).
Real quantile(const OsgtParams& p, Real prob);

/// Closed-form variance
///   V = sigma^2 + m^2 - m sigma exp(-m^2/(2 sigma^2)) / (sqrt(2 pi) Q(m/sigma)),
/// strictly below sigma^2 for m > 0; exactly sigma^2 at m = 0.
Real variance(const OsgtParams& p) noexcept;

/// Sufficient condition m/sigma <= Q^{-1}(1/4): the distribution is then
/// sigma^2-sub-Gaussian. Not a full characterization.
bool is_sub_gaussian(const OsgtParams& p);

/// One exact draw: sample G ~ N(0, sigma^2) until |G| >= m, return
/// sign(G) (|G| - m). Expected trials 1/(2Q(m/sigma)). Throws
/// std::runtime_error after 1e9 rejections (only a broken RNG gets there).
Real sample(const OsgtParams& p, rng::Stream& stream);
Real sample(const OsgtParams& p, rng::Stream& stream, std::uint64_t& trials);

/// Gaussian and Laplace scales matched to the OSGT's actual variance:
/// sigma_g^2 = V(m, sigma^2) and 2 lambda^2 = V(m, sigma^2).
struct MatchedReferences {
    Real sigma_g2;
    Real lambda;
};

MatchedReferences matched_references(const OsgtParams& p);

enum class Reference { osgt, gaussian, laplace };

/// Survival-ratio scan against a matched-variance reference. For the
/// Gaussian reference the ratio is S_osgt/S_gauss (OSGT claims the heavier
/// tail); for Laplace it is S_laplace/S_osgt. y0 is the start of the longest
/// strictly-increasing suffix of the ratio sequence, NaN if there is none
/// (e.g. the self-comparison, which is identically 1).
struct TailVerdict {
    Real y0;
    std::vector<std::pair<Real, Real>> ratio_samples;
};

TailVerdict survival_ratio_scan(const OsgtParams& p, Reference ref,
                                std::span<const Real> grid);

// Matched-variance reference densities/survivals used by the scan and the
// figure datasets.
Real gaussian_pdf(Real sigma2, Real y) noexcept;
LogProb gaussian_log_survival(Real sigma2, Real y) noexcept;
Real laplace_pdf(Real lambda, Real y) noexcept;
LogProb laplace_log_survival(Real lambda, Real y) noexcept;

}  // namespace osgt::dist
