#include "osgt/mech.hpp"

#include <cmath>
#include <stdexcept>

namespace osgt::mech {

void Sensitivity::validate() const {
    if (k < 1) throw std::invalid_argument("Sensitivity: k must be >= 1");
    if (!(delta1 > 0.0) || !(delta2 > 0.0)) {
        throw std::invalid_argument("Sensitivity: delta1 and delta2 must be > 0");
    }
    if (per_coord) {
        const double d = *per_coord;
        if (!(d > 0.0)) {
            throw std::invalid_argument("Sensitivity: per_coord must be > 0");
        }
        constexpr double slack = 1.0 + 1e-12;
        if (delta2 * delta2 > k * d * d * slack || delta1 > k * d * slack) {
            throw std::invalid_argument(
                "Sensitivity: requires delta2^2 <= k*per_coord^2 and delta1 <= k*per_coord");
        }
    }
}

MechanismOutput apply_osgt(const QueryResult& q, const dist::OsgtParams& p,
                           rng::Stream& stream) {
    MechanismOutput out{q, Mechanism::osgt, p.m(), p.sigma2()};
    for (double& v : out.values) v += dist::sample(p, stream);
    return out;
}

MechanismOutput apply_gaussian(const QueryResult& q, Real sigma_g2,
                               rng::Stream& stream) {
    if (!(sigma_g2 > 0.0) || !std::isfinite(sigma_g2)) {
        throw std::invalid_argument("apply_gaussian: sigma_g2 must be finite and > 0");
    }
    MechanismOutput out{q, Mechanism::gaussian, 0.0, sigma_g2};
    const double sg = std::sqrt(sigma_g2);
    for (double& v : out.values) v += sg * stream.next_standard_normal();
    return out;
}

MechanismOutput apply_laplace(const QueryResult& q, Real lambda,
                              rng::Stream& stream) {
    if (!(lambda > 0.0) || !std::isfinite(lambda)) {
        throw std::invalid_argument("apply_laplace: lambda must be finite and > 0");
    }
    MechanismOutput out{q, Mechanism::laplace, 0.0, lambda};
    for (double& v : out.values) {
        const double u = stream.next_uniform();
        v += (u < 0.5) ? lambda * std::log(2.0 * u)
                       : -lambda * std::log(2.0 * (1.0 - u));
    }
    return out;
}

Real laplace_epsilon(Real delta1, Real lambda) {
    if (!(delta1 > 0.0) || !(lambda > 0.0)) {
        throw std::invalid_argument("laplace_epsilon: requires delta1 > 0 and lambda > 0");
    }
    return delta1 / lambda;
}

Real privacy_loss(const dist::OsgtParams& p, Real q, Real q_prime, Real y) noexcept {
    const double s2 = p.sigma2();
    const double dq = y - q;
    const double dqp = y - q_prime;
    return (dqp * dqp - dq * dq) / (2.0 * s2) +
           p.m() * (std::abs(dqp) - std::abs(dq)) / s2;
}

}  // namespace osgt::mech
