#pragma once

#include <optional>
#include <vector>

#include "osgt/dist.hpp"
#include "osgt/rng.hpp"
#include "osgt/types.hpp"

namespace osgt::mech {

/// Declared global query sensitivities. The library never inspects datasets;
/// neighboring-dataset semantics enter only through these values.
struct Sensitivity {
    Real delta1;                     ///< global 1-sensitivity
    Real delta2;                     ///< global 2-sensitivity
    std::optional<Real> per_coord;   ///< per-coordinate sensitivity when identical
    int k;                           ///< query dimension

    /// Throws std::invalid_argument if any value is non-positive or the
    /// norm relations delta2^2 <= k per_coord^2, delta1 <= k per_coord fail.
    void validate() const;
};

using QueryResult = std::vector<Real>;

enum class Mechanism { osgt, gaussian, laplace };

struct MechanismOutput {
    std::vector<Real> values;
    Mechanism mechanism;
    Real offset;  ///< osgt: m; otherwise 0
    Real scale;   ///< osgt/gaussian: variance parameter; laplace: scale lambda
};

/// Adds one independent OSGT draw per coordinate.
MechanismOutput apply_osgt(const QueryResult& q, const dist::OsgtParams& p,
                           rng::Stream& stream);

MechanismOutput apply_gaussian(const QueryResult& q, Real sigma_g2,
                               rng::Stream& stream);

MechanismOutput apply_laplace(const QueryResult& q, Real lambda,
                              rng::Stream& stream);

/// The pure-DP epsilon of the Laplace mechanism at scale lambda.
Real laplace_epsilon(Real delta1, Real lambda);

/// Privacy loss of the 1-D OSGT mechanism,
///   l(y) = ((y-q')^2 - (y-q)^2)/(2 sigma^2) + m(|y-q'| - |y-q|)/sigma^2.
/// Antisymmetric in (q, q') exactly: l_{q,q'}(y) = -l_{q',q}(y).
Real privacy_loss(const dist::OsgtParams& p, Real q, Real q_prime, Real y) noexcept;

}  // namespace osgt::mech
