#include "osgt/batch.hpp"

#include <exception>
#include <stdexcept>

#include "osgt/account.hpp"
#include "osgt/rng.hpp"

namespace osgt::batch {

namespace {

// Exceptions must not escape an OpenMP region; the first one is captured and
// rethrown after the join.
class FirstError {
public:
    void capture() noexcept {
#pragma omp critical(osgt_batch_first_error)
        {
            if (!err_) err_ = std::current_exception();
        }
    }
    bool set() const noexcept { return static_cast<bool>(err_); }
    void rethrow_if_set() const {
        if (err_) std::rethrow_exception(err_);
    }

private:
    std::exception_ptr err_;
};

}  // namespace

SampleStats sample_osgt(const dist::OsgtParams& p, std::size_t n,
                        std::uint64_t seed, Execution exec) {
    SampleStats stats;
    stats.values.resize(n);
    std::uint64_t trials = 0;
    const std::int64_t count = static_cast<std::int64_t>(n);
    double* values = stats.values.data();
    FirstError err;

    if (exec == Execution::parallel) {
#pragma omp parallel for schedule(static) reduction(+ : trials)
        for (std::int64_t i = 0; i < count; ++i) {
            if (err.set()) continue;
            try {
                rng::Stream stream(seed, static_cast<std::uint64_t>(i));
                values[i] = dist::sample(p, stream, trials);
            } catch (...) {
                err.capture();
            }
        }
    } else {
        for (std::int64_t i = 0; i < count; ++i) {
            rng::Stream stream(seed, static_cast<std::uint64_t>(i));
            values[i] = dist::sample(p, stream, trials);
        }
    }
    err.rethrow_if_set();
    stats.trials = trials;
    return stats;
}

std::vector<Real> renyi_tau_grid(const dist::OsgtParams& p, Real delta_max,
                                 Real alpha, int grid_n, Execution exec) {
    if (grid_n < 2) throw std::invalid_argument("renyi_tau_grid: grid_n must be >= 2");
    if (!(alpha > 1.0)) throw std::domain_error("renyi_tau_grid: alpha must be > 1");
    if (!(delta_max > 0.0)) throw std::domain_error("renyi_tau_grid: delta_max must be > 0");
    std::vector<Real> taus(static_cast<std::size_t>(grid_n));
    double* out = taus.data();

    if (exec == Execution::parallel) {
#pragma omp parallel for schedule(static)
        for (int i = 0; i < grid_n; ++i) {
            const double d = delta_max * static_cast<double>(i) / (grid_n - 1);
            out[i] = account::osgt_renyi_closed_form(p, d, alpha).tau;
        }
    } else {
        for (int i = 0; i < grid_n; ++i) {
            const double d = delta_max * static_cast<double>(i) / (grid_n - 1);
            out[i] = account::osgt_renyi_closed_form(p, d, alpha).tau;
        }
    }
    return taus;
}

std::vector<Real> log_delta_curve(const dist::OsgtParams& p, Real delta_q,
                                  std::span<const Real> eps, Execution exec) {
    if (!(delta_q > 0.0)) throw std::domain_error("log_delta_curve: Delta must be > 0");
    for (double e : eps) {
        if (!(e >= 0.0)) throw std::domain_error("log_delta_curve: eps must be >= 0");
    }
    std::vector<Real> out(eps.size());
    const std::int64_t count = static_cast<std::int64_t>(eps.size());
    FirstError err;

    if (exec == Execution::parallel) {
#pragma omp parallel for schedule(static)
        for (std::int64_t i = 0; i < count; ++i) {
            if (err.set()) continue;
            try {
                out[static_cast<std::size_t>(i)] =
                    account::osgt_delta(p, delta_q, eps[static_cast<std::size_t>(i)])
                        .log_delta;
            } catch (...) {
                err.capture();
            }
        }
    } else {
        for (std::int64_t i = 0; i < count; ++i) {
            out[static_cast<std::size_t>(i)] =
                account::osgt_delta(p, delta_q, eps[static_cast<std::size_t>(i)])
                    .log_delta;
        }
    }
    err.rethrow_if_set();
    return out;
}

}  // namespace osgt::batch
