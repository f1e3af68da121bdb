// Times the OpenMP kernels against their serial reference paths and verifies
// on the fly that both produce identical results.

#include <omp.h>

#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "osgt/batch.hpp"
#include "osgt/dist.hpp"

using namespace osgt;

namespace {

template <typename F>
double time_best_of(F&& f, int reps) {
    double best = 1e300;
    for (int r = 0; r < reps; ++r) {
        const double t0 = omp_get_wtime();
        f();
        best = std::min(best, omp_get_wtime() - t0);
    }
    return best;
}

void report(const char* name, double serial, double parallel) {
    std::printf("%-24s serial %9.4f s   parallel %9.4f s   speedup %5.2fx\n", name,
                serial, parallel, serial / parallel);
}

}  // namespace

int main(int argc, char** argv) {
    std::size_t n = 2000000;
    int grid_n = 20001;
    int reps = 3;
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        auto next = [&] { return std::strtoull(argv[++i], nullptr, 10); };
        if (arg == "--n" && i + 1 < argc) {
            n = next();
        } else if (arg == "--grid-n" && i + 1 < argc) {
            grid_n = static_cast<int>(next());
        } else if (arg == "--reps" && i + 1 < argc) {
            reps = static_cast<int>(next());
        } else {
            std::printf("usage: %s [--n N] [--grid-n N] [--reps N]\n", argv[0]);
            return 1;
        }
    }

#pragma omp parallel
    {
        if (omp_get_thread_num() == 0) {
            std::printf("OpenMP threads: %d\n", omp_get_num_threads());
        }
    }

    dist::OsgtParams p(3.0, 40.0);

    // warm-up
    (void)batch::sample_osgt(p, n / 10, 1);

    {
        batch::SampleStats s, q;
        const double ts = time_best_of(
            [&] { s = batch::sample_osgt(p, n, 42, batch::Execution::serial); }, reps);
        const double tp = time_best_of(
            [&] { q = batch::sample_osgt(p, n, 42, batch::Execution::parallel); }, reps);
        if (s.values != q.values || s.trials != q.trials) {
            std::printf("MISMATCH in sample_osgt\n");
            return 2;
        }
        report("sample_osgt", ts, tp);
    }

    {
        std::vector<double> s, q;
        const double ts = time_best_of(
            [&] { s = batch::renyi_tau_grid(p, 1.0, 10.0, grid_n, batch::Execution::serial); },
            reps);
        const double tp = time_best_of(
            [&] { q = batch::renyi_tau_grid(p, 1.0, 10.0, grid_n, batch::Execution::parallel); },
            reps);
        if (s != q) {
            std::printf("MISMATCH in renyi_tau_grid\n");
            return 2;
        }
        report("renyi_tau_grid", ts, tp);
    }

    {
        std::vector<double> eps;
        eps.reserve(static_cast<std::size_t>(grid_n));
        for (int i = 0; i < grid_n; ++i) eps.push_back(6.0 * (i + 1) / grid_n);
        std::vector<double> s, q;
        const double ts = time_best_of(
            [&] { s = batch::log_delta_curve(p, 1.0, eps, batch::Execution::serial); }, reps);
        const double tp = time_best_of(
            [&] { q = batch::log_delta_curve(p, 1.0, eps, batch::Execution::parallel); }, reps);
        if (s != q) {
            std::printf("MISMATCH in log_delta_curve\n");
            return 2;
        }
        report("log_delta_curve", ts, tp);
    }

    return 0;
}
