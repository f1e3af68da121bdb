#pragma once

#include <vector>

#include "osgt/dist.hpp"
#include "osgt/mech.hpp"
#include "osgt/types.hpp"

namespace osgt::account {

enum class DeltaSource {
    exact_theorem1,
    gaussian_analytic,
    renyi_conversion,
    quadrature_oracle,
};

/// An (epsilon, delta) point with provenance. log_delta carries the value
/// below the smallest positive double; delta = exp(log_delta) clamped to [0,1].
struct PrivacyPoint {
    Real eps;
    Real delta;
    LogProb log_delta;
    DeltaSource source;
};

/// Zero-concentrated DP pair. zeta depends on the order it was evaluated at,
/// so that alpha is stored alongside. The bound on the order-alpha Renyi
/// divergence is zeta + alpha * rho.
struct ZcdpBound {
    Real zeta;
    Real rho;
    int k;
    Real alpha;

    Real value() const noexcept { return zeta + alpha * rho; }
};

/// Order-alpha Renyi divergence bound with the term breakdown used to debug
/// cancellation: the Phi-argument intermediates b1..b4 (b4 = b3 - Delta), the
/// exponential factor A and the bracket B-bar, both kept in log form.
struct RenyiEvaluation {
    Real alpha;
    Real tau;
    Real delta_qq;
    Real b1, b2, b3, b4;
    double log_a_factor;
    double log_b_bar;
};

struct WorstCaseRenyi {
    RenyiEvaluation best;
    bool max_at_endpoint;
    std::vector<Real> grid_taus;
};

/// Location of the case split of the exact delta formula,
/// eps* = (Delta^2 + 2 m Delta) / (2 sigma^2); both branches agree there.
struct CaseBoundary {
    Real eps_star;
};

CaseBoundary case_boundary(const dist::OsgtParams& p, Real delta_q);

/// Injectable Q implementation for the branch evaluators; the selftest uses
/// this to prove the continuity check catches a corrupted Q.
struct QFunctions {
    Real (*q)(Real);
    LogProb (*log_q)(Real);
};

const QFunctions& default_q_functions() noexcept;

/// The two branches of the exact delta formula, evaluated unconditionally
/// (branch1 is the small-eps case). With a = sigma/Delta, b = sigma/(2m+Delta):
///   branch1: 1 - [Q(1/(2b) - b eps) + e^eps Q(1/(2b) + b eps)] / (2Q(m/sigma))
///   branch2:     [Q(a eps - 1/(2a)) - e^eps Q(a eps + 1/(2a))] / (2Q(m/sigma))
/// e^eps Q(x) products are exp(eps + ln Q(x)); branch2 runs fully in log space.
Real osgt_delta_branch1(const dist::OsgtParams& p, Real delta_q, Real eps,
                        const QFunctions& qf = default_q_functions());
Real osgt_delta_branch2(const dist::OsgtParams& p, Real delta_q, Real eps,
                        const QFunctions& qf = default_q_functions());

/// Exact 1-D delta(eps) of the OSGT mechanism. Branch chosen by
/// sigma^2 eps / Delta <= Delta/2 + m. Values within 1e-12 outside [0,1] are
/// clamped; anything further out throws std::logic_error.
PrivacyPoint osgt_delta(const dist::OsgtParams& p, Real delta_q, Real eps);

/// Analytic Gaussian delta(eps) as the single unified expression
///   Q(sg eps/D2 - D2/(2 sg)) - e^eps Q(sg eps/D2 + D2/(2 sg)).
PrivacyPoint gaussian_delta(Real sigma_g2, Real delta2, Real eps);

/// (zeta, rho)-zCDP of the k-dimensional mechanism:
///   rho  = Delta2^2 / (2 sigma^2)
///   zeta = k/(alpha-1) ln((1 - Q(m/sigma)) / Q(m/sigma)).
ZcdpBound osgt_zcdp(const dist::OsgtParams& p, Real delta2, int k, Real alpha);

/// Exact order-alpha Renyi divergence of the 1-D mechanism at location
/// distance delta_qq. The A (Phi(b3/s) - Phi(b4/s)) term is assembled as
/// exp(ln A + ln(Q(b4/s) - Q(b3/s))) so it survives the cancellation that
/// otherwise requires arbitrary precision.
RenyiEvaluation osgt_renyi_closed_form(const dist::OsgtParams& p, Real delta_qq,
                                       Real alpha);

/// Linear scan of the closed form over a uniform grid of delta_qq in
/// [0, delta_max]; returns the maximizer and whether it is the endpoint.
WorstCaseRenyi osgt_renyi_worst_case(const dist::OsgtParams& p, Real delta_max,
                                     Real alpha, int grid_n);

/// k-dimensional bound for identical per-coordinate sensitivities:
///   tau = alpha Delta2^2/(2 sigma^2) + k/(alpha-1) ln(B-bar / (2Q(m/sigma))).
RenyiEvaluation osgt_renyi_k_dim(const dist::OsgtParams& p,
                                 const mech::Sensitivity& s, Real alpha);

/// Independent oracle: adaptive quadrature of the order-alpha Renyi integral,
/// assembled in log space with kink splits at both locations. Throws
/// std::runtime_error if refinement stalls.
Real renyi_quadrature(const dist::OsgtParams& p, Real delta_qq, Real alpha);

/// Independent oracle for the exact delta: quadrature of the positive part of
/// f_q - e^eps f_q'. precision_floor flags delta below 1e-13, where the
/// oracle's relative-error target no longer applies.
struct DeltaOracle {
    Real value;
    bool precision_floor;
    bool converged;
};

DeltaOracle delta_quadrature(const dist::OsgtParams& p, Real delta_qq, Real eps);

/// The sign-change point of the privacy-loss integrand, found by bisection on
/// the loss function itself (not from the closed-form worst-case set).
Real privacy_loss_crossover(const dist::OsgtParams& p, Real delta_qq, Real eps);

/// Renyi-to-approximate-DP conversion at a fixed order:
///   delta = exp((alpha-1)(tau - eps)) / (alpha-1) * (1 - 1/alpha)^alpha,
/// computed in log space, clamped to 1.
Real renyi_to_delta(Real tau, Real alpha, Real eps);

/// Achievable delta(eps) for the k-dimensional OSGT mechanism: the conversion
/// above minimized over alpha (log-spaced 200-point grid on (1+1e-6, 1e4],
/// then golden-section refinement).
PrivacyPoint osgt_delta_via_renyi(const dist::OsgtParams& p,
                                  const mech::Sensitivity& s, Real eps);

/// Same conversion route for the Gaussian mechanism (tau = alpha D2^2/(2 sg^2)).
PrivacyPoint gaussian_delta_via_renyi(Real sigma_g2, Real delta2, Real eps);

}  // namespace osgt::account
