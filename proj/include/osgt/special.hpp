#pragma once

#include <span>

#include "osgt/types.hpp"

namespace osgt::special {

inline constexpr double sqrt2 = 1.4142135623730950488;
inline constexpr double inv_sqrt2 = 0.70710678118654752440;
inline constexpr double sqrt_2pi = 2.5066282746310005024;
inline constexpr double log_sqrt_2pi = 0.91893853320467274178;
inline constexpr double ln2 = 0.69314718055994530942;

/// Gaussian upper-tail probability Q(x) = P(Z > x), Z ~ N(0,1).
/// Saturates to 1/0 at -inf/+inf. Q(x) + Q(-x) = 1 to within 1 ulp by
/// construction (the negative side is derived from the positive side).
Real q_function(Real x) noexcept;

/// ln Q(x). For x >= 8 evaluated through the Mills-ratio continued fraction
/// (Laplace's CF, modified Lentz) so no intermediate underflows; valid far
/// beyond the point where Q itself leaves double range (x ~ 38.6).
LogProb log_q_function(Real x) noexcept;

/// Mills ratio Q(x)/phi(x). Continued fraction for x >= 8, direct ratio below.
Real mills_ratio(Real x) noexcept;

/// Inverse of q_function on (0,1). AS241 (Wichura PPND16) initial valueplus
/// one Newton step on ln Q. Throws std::domain_error outside (0,1).
Real inverse_q(Real p);

/// ln(Q(lo) - Q(hi)) for lo < hi, computed as
/// ln Q(lo) + log1p(-exp(ln Q(hi) - ln Q(lo))) so the difference of two tiny
/// tails never cancels in linear space. lo = -inf is accepted (Q = 1).
/// Throws std::domain_error if lo >= hi.
LogProb log_q_difference(Real lo, Real hi);

/// log(sum(exp(v))) with the usual max shift; -inf entries are neutral.
double log_sum_exp(std::span<const double> values) noexcept;

/// Standard normal density.
Real normal_pdf(Real x) noexcept;

}  // namespace osgt::special
