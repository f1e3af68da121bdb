// osgt-dp: sampling, accounting, calibration and figure-data reproduction for
// the offset-symmetric Gaussian-tails mechanism.
//
// Exit codes: 0 success, 1 domain/usage error, 2 internal-consistency or
// oracle failure.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "osgt/account.hpp"
#include "osgt/batch.hpp"
#include "osgt/calibrate.hpp"
#include "osgt/dist.hpp"
#include "osgt/mech.hpp"
#include "osgt/selftest.hpp"
#include "osgt/special.hpp"

using json = nlohmann::json;
using namespace osgt;

namespace {

constexpr const char* version_string = "osgt-dp 1.0.0 (csv-schema 1)";

struct OutputConfig {
    std::string format = "csv";
    int precision = 12;
};

std::string fmt_general(double v, int precision) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*g", precision, v);
    return buf;
}

std::string fmt_scientific(double v, int precision) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*e", precision - 1, v);
    return buf;
}

bool is_scientific_column(const std::string& name) {
    return name.rfind("delta", 0) == 0 || name.rfind("oracle_delta", 0) == 0;
}

// One table abstraction serves every command: CSV with a header row, or a
// JSON array of row objects carrying the same values.
struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;

    void print(const OutputConfig& out) const {
        if (out.format == "json") {
            json arr = json::array();
            for (const auto& row : rows) {
                json obj;
                for (std::size_t i = 0; i < header.size(); ++i) obj[header[i]] = row[i];
                arr.push_back(obj);
            }
            std::cout << arr.dump(2) << "\n";
            return;
        }
        for (std::size_t i = 0; i < header.size(); ++i) {
            std::cout << (i ? "," : "") << header[i];
        }
        std::cout << "\n";
        for (const auto& row : rows) {
            for (std::size_t i = 0; i < header.size(); ++i) {
                const std::string cell = is_scientific_column(header[i])
                                             ? fmt_scientific(row[i], out.precision)
                                             : fmt_general(row[i], out.precision);
                std::cout << (i ? "," : "") << cell;
            }
            std::cout << "\n";
        }
    }
};

std::uint64_t seed_fallback() {
    if (const char* env = std::getenv("OSGT_DP_SEED")) {
        return std::strtoull(env, nullptr, 10);
    }
    return 0;
}

std::vector<double> twentieth_grid() {
    std::vector<double> eps;
    for (int i = 1; i <= 40; ++i) eps.push_back(i / 20.0);
    return eps;
}

Table figure_table(const std::string& figure) {
    Table t;
    if (figure == "fig2") {
        dist::OsgtParams p(3.0, 40.0);
        const auto match = dist::matched_references(p);
        t.header = {"y",          "pdf_osgt",    "pdf_gaussian", "pdf_laplace",
                    "sf_osgt",    "sf_gaussian", "sf_laplace"};
        for (double y = -60.0; y <= 60.0 + 1e-9; y += 0.25) {
            t.rows.push_back({y, dist::pdf(p, y), dist::gaussian_pdf(match.sigma_g2, y),
                              dist::laplace_pdf(match.lambda, y),
                              dist::survival(p, y),
                              std::exp(dist::gaussian_log_survival(match.sigma_g2, y)),
                              std::exp(dist::laplace_log_survival(match.lambda, y))});
        }
    } else if (figure == "fig3") {
        t.header = {"sigma2", "v_m2", "v_m3"};
        for (int i = 1; i <= 100; ++i) {
            const double s2 = 2.0 * i;
            t.rows.push_back({s2, dist::variance(dist::OsgtParams(2.0, s2)),
                              dist::variance(dist::OsgtParams(3.0, s2))});
        }
    } else if (figure == "fig4a" || figure == "fig4b") {
        const double m = (figure == "fig4a") ? 3.0 : 2.0;
        const double s2 = (figure == "fig4a") ? 40.0 : 20.0;
        dist::OsgtParams p(m, s2);
        const mech::Sensitivity s{1.0, 1.0, 1.0, 1};
        t.header = {"eps", "delta_osgt", "delta_gaussian", "ratio"};
        for (const auto& row :
             calibrate::compare_mechanisms(p, s, twentieth_grid())) {
            t.rows.push_back({row.eps, row.delta_osgt, row.delta_gaussian, row.ratio});
        }
    } else if (figure == "fig5") {
        dist::OsgtParams p(3.0, 40.0);
        const double sg2 = dist::matched_references(p).sigma_g2;
        t.header = {"alpha", "renyi_numeric", "zcdp_bound", "gaussian_rho_alpha"};
        for (double alpha = 1.25; alpha <= 100.0 + 1e-9; alpha += 0.25) {
            const double numeric = account::renyi_quadrature(p, 1.0, alpha);
            const double bound = account::osgt_zcdp(p, 1.0, 1, alpha).value();
            t.rows.push_back({alpha, numeric, bound, alpha / (2.0 * sg2)});
        }
    } else if (figure == "fig6") {
        dist::OsgtParams p(15.0, 630.0);
        const mech::Sensitivity s{8.0, std::sqrt(8.0), 1.0, 8};
        t.header = {"eps", "delta_osgt", "delta_gaussian", "ratio"};
        for (const auto& row :
             calibrate::compare_mechanisms(p, s, twentieth_grid())) {
            t.rows.push_back({row.eps, row.delta_osgt, row.delta_gaussian, row.ratio});
        }
    } else {
        throw std::domain_error("unknown figure '" + figure +
                                "' (expected fig2|fig3|fig4a|fig4b|fig5|fig6)");
    }
    return t;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"offset-symmetric Gaussian-tails mechanism toolkit"};
    app.set_version_flag("--version", version_string);
    app.require_subcommand(1);

    OutputConfig out;
    app.add_option("--format", out.format, "output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    app.add_option("--precision", out.precision, "significant digits in output")
        ->check(CLI::Range(1, 17))
        ->capture_default_str();

    // ---- sample ----
    double m = 0.0;
    double sigma2 = 1.0;
    std::size_t n = 1;
    std::uint64_t seed = seed_fallback();
    auto* sample = app.add_subcommand("sample", "draw OSGT variates");
    sample->add_option("--m", m, "offset parameter m")->required();
    sample->add_option("--sigma2", sigma2, "scale parameter sigma^2")->required();
    sample->add_option("-n,--count", n, "number of variates")->check(CLI::PositiveNumber)->required();
    sample->add_option("--seed", seed, "64-bit seed (default: OSGT_DP_SEED or 0)");

    // ---- delta ----
    double delta_q = 1.0;
    double eps = 1.0;
    bool with_oracle = false;
    std::string mechanism = "osgt";
    auto* delta = app.add_subcommand("delta", "exact approximate-DP delta(eps)");
    delta->add_option("--m", m, "offset parameter m (osgt)");
    delta->add_option("--sigma2", sigma2,
                      "sigma^2 (osgt input scale; gaussian: sigma_g^2)")->required();
    delta->add_option("--Delta", delta_q, "global sensitivity")->required();
    delta->add_option("--eps", eps, "epsilon")->required();
    delta->add_option("--mechanism", mechanism, "osgt|gaussian")
        ->check(CLI::IsMember({"osgt", "gaussian"}))
        ->capture_default_str();
    delta->add_flag("--oracle", with_oracle,
                    "also run the quadrature oracle and print the deviation");

    // ---- zcdp ----
    double delta2 = 1.0;
    int k = 1;
    double alpha = 2.0;
    auto* zcdp = app.add_subcommand("zcdp", "zero-concentrated DP bound");
    zcdp->add_option("--m", m)->required();
    zcdp->add_option("--sigma2", sigma2)->required();
    zcdp->add_option("--Delta2", delta2, "global 2-sensitivity")->required();
    zcdp->add_option("--k", k, "query dimension")->required();
    zcdp->add_option("--alpha", alpha, "Renyi order")->required();

    // ---- renyi ----
    bool worst_case = false;
    int grid_n = 101;
    std::optional<int> renyi_k;
    std::optional<double> renyi_delta2;
    auto* renyi = app.add_subcommand("renyi", "Renyi divergence (closed form)");
    renyi->add_option("--m", m)->required();
    renyi->add_option("--sigma2", sigma2)->required();
    renyi->add_option("--Delta", delta_q, "location distance (per-coordinate for --k)")->required();
    renyi->add_option("--alpha", alpha)->required();
    renyi->add_flag("--worst-case", worst_case, "scan Delta_qq over [0, Delta]");
    renyi->add_option("--grid-n", grid_n, "scan grid size")->check(CLI::Range(2, 1000000));
    renyi->add_option("--k", renyi_k, "dimension for the k-dimensional bound");
    renyi->add_option("--Delta2", renyi_delta2, "2-sensitivity (default sqrt(k) Delta)");
    renyi->add_flag("--oracle", with_oracle, "also run the quadrature oracle (k = 1)");

    // ---- convert ----
    std::optional<double> sigma_g2_opt;
    auto* convert = app.add_subcommand(
        "convert", "Renyi-to-approximate-DP conversion (osgt and matched gaussian)");
    convert->add_option("--m", m)->required();
    convert->add_option("--sigma2", sigma2)->required();
    convert->add_option("--k", k)->required();
    convert->add_option("--Delta", delta_q, "per-coordinate sensitivity")->required();
    convert->add_option("--Delta2", renyi_delta2, "2-sensitivity (default sqrt(k) Delta)");
    convert->add_option("--eps", eps)->required();
    convert->add_option("--sigma-g2", sigma_g2_opt,
                        "gaussian variance (default: matched V(m, sigma2))");

    // ---- calibrate ----
    double target_delta = 1e-10;
    std::string solve_for = "epsilon";
    auto* cal = app.add_subcommand("calibrate", "solve for epsilon or sigma2");
    cal->add_option("--m", m)->required();
    cal->add_option("--sigma2", sigma2, "required when solving for epsilon");
    cal->add_option("--Delta", delta_q)->required();
    cal->add_option("--delta", target_delta, "target delta")->required();
    cal->add_option("--eps", eps, "required when solving for sigma2");
    cal->add_option("--solve", solve_for, "epsilon|sigma2")
        ->check(CLI::IsMember({"epsilon", "sigma2"}))
        ->capture_default_str();
    cal->add_option("--mechanism", mechanism, "osgt|gaussian (epsilon only)")
        ->check(CLI::IsMember({"osgt", "gaussian"}))
        ->capture_default_str();

    // ---- reproduce ----
    std::string figure;
    auto* repro = app.add_subcommand("reproduce", "emit a figure dataset");
    repro->add_option("--figure", figure, "fig2|fig3|fig4a|fig4b|fig5|fig6")->required();

    // ---- selftest ----
    std::string inject_fault;
    std::size_t st_samples = 1000000;
    std::uint64_t st_seed = 20240801;
    auto* st = app.add_subcommand("selftest", "run the oracle and invariant suite");
    st->add_option("--seed", st_seed, "suite RNG seed");
    st->add_option("--samples", st_samples, "draws per sampler check");
    st->add_option("--inject-fault", inject_fault, "test hook: 'q' corrupts the Q function")
        ->check(CLI::IsMember({"q"}));

    CLI11_PARSE(app, argc, argv);

    try {
        if (sample->parsed()) {
            const auto stats = batch::sample_osgt(dist::OsgtParams(m, sigma2), n, seed);
            if (out.format == "json") {
                json arr = json::array();
                for (double v : stats.values) arr.push_back(v);
                std::cout << arr.dump(2) << "\n";
            } else {
                for (double v : stats.values) {
                    std::cout << fmt_general(v, out.precision) << "\n";
                }
            }
        } else if (delta->parsed()) {
            Table t;
            account::PrivacyPoint pt{};
            if (mechanism == "gaussian") {
                pt = account::gaussian_delta(sigma2, delta_q, eps);
                t.header = {"sigma_g2", "Delta2", "eps", "delta"};
                t.rows.push_back({sigma2, delta_q, eps, pt.delta});
            } else {
                dist::OsgtParams p(m, sigma2);
                pt = account::osgt_delta(p, delta_q, eps);
                t.header = {"m", "sigma2", "Delta", "eps", "delta"};
                t.rows.push_back({m, sigma2, delta_q, eps, pt.delta});
            }
            if (with_oracle) {
                const dist::OsgtParams p(mechanism == "gaussian" ? 0.0 : m, sigma2);
                const auto oracle = account::delta_quadrature(p, delta_q, eps);
                const double dev = std::abs(pt.delta - oracle.value) /
                                   std::max(oracle.value, 1e-13);
                t.header.insert(t.header.end(),
                                {"oracle_delta", "rel_deviation", "precision_floor"});
                auto& row = t.rows.back();
                row.insert(row.end(), {oracle.value, dev,
                                       oracle.precision_floor ? 1.0 : 0.0});
                if (!oracle.converged) {
                    throw std::runtime_error("delta oracle did not converge");
                }
            }
            t.print(out);
        } else if (zcdp->parsed()) {
            const auto b = account::osgt_zcdp(dist::OsgtParams(m, sigma2), delta2, k, alpha);
            Table t;
            t.header = {"m", "sigma2", "Delta2", "k", "alpha", "zeta", "rho", "bound"};
            t.rows.push_back({m, sigma2, delta2, static_cast<double>(k), alpha, b.zeta,
                              b.rho, b.value()});
            t.print(out);
        } else if (renyi->parsed()) {
            dist::OsgtParams p(m, sigma2);
            Table t;
            if (worst_case) {
                const auto wc = account::osgt_renyi_worst_case(p, delta_q, alpha, grid_n);
                t.header = {"alpha", "tau", "maximizer", "max_at_endpoint"};
                t.rows.push_back({alpha, wc.best.tau, wc.best.delta_qq,
                                  wc.max_at_endpoint ? 1.0 : 0.0});
            } else if (renyi_k) {
                const double d2 = renyi_delta2.value_or(std::sqrt(*renyi_k) * delta_q);
                const mech::Sensitivity s{*renyi_k * delta_q, d2, delta_q, *renyi_k};
                const auto ev = account::osgt_renyi_k_dim(p, s, alpha);
                t.header = {"alpha", "k", "Delta2", "tau", "log_b_bar"};
                t.rows.push_back({alpha, static_cast<double>(*renyi_k), d2, ev.tau,
                                  ev.log_b_bar});
            } else {
                const auto ev = account::osgt_renyi_closed_form(p, delta_q, alpha);
                t.header = {"alpha", "tau", "b1", "b2", "b3", "b4", "log_a", "log_b_bar"};
                t.rows.push_back({alpha, ev.tau, ev.b1, ev.b2, ev.b3, ev.b4,
                                  ev.log_a_factor, ev.log_b_bar});
                if (with_oracle) {
                    const double oracle = account::renyi_quadrature(p, delta_q, alpha);
                    t.header.insert(t.header.end(), {"oracle_tau", "rel_deviation"});
                    auto& row = t.rows.back();
                    row.insert(row.end(),
                               {oracle, std::abs(ev.tau - oracle) /
                                            std::max(std::abs(oracle), 1e-300)});
                }
            }
            t.print(out);
        } else if (convert->parsed()) {
            dist::OsgtParams p(m, sigma2);
            const double d2 = renyi_delta2.value_or(std::sqrt(k) * delta_q);
            const mech::Sensitivity s{k * delta_q, d2, delta_q, k};
            const double sg2 = sigma_g2_opt.value_or(dist::matched_references(p).sigma_g2);
            const auto t_pt = account::osgt_delta_via_renyi(p, s, eps);
            const auto g_pt = account::gaussian_delta_via_renyi(sg2, d2, eps);
            Table t;
            t.header = {"eps", "delta_osgt", "delta_gaussian", "sigma_g2"};
            t.rows.push_back({eps, t_pt.delta, g_pt.delta, sg2});
            t.print(out);
        } else if (cal->parsed()) {
            Table t;
            if (solve_for == "sigma2") {
                if (cal->count("--eps") == 0) {
                    throw std::domain_error("calibrate --solve sigma2 requires --eps");
                }
                const double s2 = calibrate::sigma2_for_target(m, delta_q, eps, target_delta);
                t.header = {"m", "Delta", "eps", "delta", "sigma2"};
                t.rows.push_back({m, delta_q, eps, target_delta, s2});
            } else {
                if (cal->count("--sigma2") == 0) {
                    throw std::domain_error("calibrate --solve epsilon requires --sigma2");
                }
                double eps_out;
                if (mechanism == "gaussian") {
                    eps_out = calibrate::epsilon_for_delta_gaussian(sigma2, delta_q,
                                                                    target_delta);
                } else {
                    eps_out = calibrate::epsilon_for_delta(dist::OsgtParams(m, sigma2),
                                                           delta_q, target_delta);
                }
                t.header = {"m", "sigma2", "Delta", "delta", "epsilon"};
                t.rows.push_back({m, sigma2, delta_q, target_delta, eps_out});
            }
            t.print(out);
        } else if (repro->parsed()) {
            figure_table(figure).print(out);
        } else if (st->parsed()) {
            selftest::Options opt;
            opt.seed = st_seed;
            opt.sample_count = st_samples;
            opt.corrupt_q = (inject_fault == "q");
            const auto results = selftest::run(opt);
            int failed = 0;
            for (const auto& r : results) {
                if (!r.passed) ++failed;
                std::printf("[%s] %-28s (%7.3f s)  %s\n", r.passed ? "PASS" : "FAIL",
                            r.name.c_str(), r.seconds, r.detail.c_str());
            }
            std::printf("%zu checks, %d failed\n", results.size(), failed);
            if (failed > 0) return 2;
        }
    } catch (const CLI::Error& e) {
        return app.exit(e);
    } catch (const calibrate::CalibrationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
