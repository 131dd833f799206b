// hotlane: run, analyze and compare HOT-lane pricing scenarios, estimate VOT from output.

#include <cmath>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "hotlane/config.hpp"
#include "hotlane/error.hpp"
#include "hotlane/estimation.hpp"
#include "hotlane/records_io.hpp"
#include "hotlane/scenario.hpp"

using namespace hotlane;

namespace {

enum Exit { kOk = 0, kConfig = 1, kRuntime = 2, kNotEstimable = 3 };

ScenarioConfig load(const std::string& path) {
    ScenarioConfig cfg = load_config(path);
    for (const auto& w : cfg.warnings) std::cerr << "warning: " << w << '\n';
    return cfg;
}

int cmd_run(const std::string& config, const std::string& out) {
    const ScenarioConfig cfg = load(config);
    const RunResult r = run(cfg);
    write_csv_file(out, r.records);
    if (r.status == RunStatus::Gridlock) {
        std::cerr << "aborted: " << r.message << " (" << r.records.size() << " rows written)\n";
        return kRuntime;
    }
    std::fprintf(stderr, "%ld steps, %zu rows -> %s\n", r.steps, r.records.size(), out.c_str());
    return kOk;
}

void print_stability(const char* side, const StabilityReport& s) {
    std::printf("  J from %s: eigenvalues", side);
    for (const auto& e : s.eigenvalues) {
        if (e.imag() == 0.0) std::printf(" %.6g", e.real());
        else std::printf(" %.6g%+.6gi", e.real(), e.imag());
    }
    std::printf("  trace %.6g det %.6g -> %s\n", s.trace, s.determinant, s.stable ? "stable" : "unstable");
}

int cmd_analyze(const std::string& config, std::optional<double> at) {
    const ScenarioConfig cfg = load(config);
    const AnalysisReport rep = analyze(cfg, at);
    const double t = at.value_or(cfg.horizon);
    std::printf("scenario %s, evaluated at t = %g h\n", cfg.name.c_str(), t);
    std::printf("rho_c HOT %.6g GP %.6g, C0 HOT %.6g GP %.6g\n", critical_density(cfg.fd_hot),
                critical_density(cfg.fd_gp), capacity(cfg.fd_hot), capacity(cfg.fd_gp));
    std::printf("A1: %s\n", rep.a1.holds() ? "holds" : ("fails: " + rep.a1.failures()).c_str());
    if (rep.equilibrium) {
        const auto& eq = *rep.equilibrium;
        std::printf("p0 = %.6g\n", eq.p0);
        if (eq.regime == GrowthRegime::Exponential) {
            std::printf("GP regime: exponential growth towards jam (triangular diagram)\n");
        } else {
            std::printf("GP regime: linear growth on the flow floor\n");
            std::printf("  omega0 %.6g, d delta2/dt %.6g veh/h, d omega/dt %.6g, omega(t0) %.6g\n",
                        eq.growth.omega0, eq.growth.trip_slope, eq.growth.omega_slope, eq.growth.omega1);
        }
    } else {
        std::printf("p0: %s\n", rep.equilibrium_error.c_str());
    }
    if (rep.loop) {
        const auto& l = *rep.loop;
        std::printf("linearised loop at omega = %.6g: H %.6g, J below %.6g, J above %.6g\n", l.omega,
                    l.coefficients.H, l.coefficients.J_suc, l.coefficients.J_soc);
        print_stability("below", l.below);
        print_stability("above", l.above);
    } else {
        std::printf("linearised loop: %s\n", rep.loop_error.c_str());
    }
    return kOk;
}

int cmd_estimate(const std::string& records, const std::string& model, double alpha, double bin_width) {
    std::vector<SimulationRecord> rows;
    try {
        rows = read_csv_file(records);
    } catch (const std::runtime_error& e) {
        throw ConfigError(std::string("records: ") + e.what());
    }
    std::vector<Observation> obs;
    obs.reserve(rows.size());
    for (const auto& r : rows) obs.push_back({r.t, r.u, r.omega, r.e2_tilde, r.e21_tilde});
    if (model == "ue") {
        const auto pts = pool_cdf_points(obs, bin_width);
        std::printf("x,F_hat,count\n");
        for (const auto& p : pts) std::printf("%.9g,%.9g,%zu\n", p.x, p.F_hat, p.count);
        return kOk;
    }
    const LogitVotSummary s = summarize_logit_vot(obs, alpha);
    std::printf("pi_star_mean,%.9g\npi_star_median,%.9g\nused,%zu\nskipped,%zu\n", s.mean, s.median, s.used,
                s.skipped);
    return kOk;
}

void print_lane(const char* name, const LaneMetrics& m) {
    std::printf("  %-4s delay %12.6g veh h  served %12.6g  initiated %12.6g  mean trip %10.6g h\n", name,
                m.delay, m.served, m.initiated, m.mean_travel_time);
}

int cmd_compare(const std::string& config) {
    const ScenarioConfig cfg = load(config);
    const Comparison c = compare_hov_hot(cfg);
    for (const auto& [label, m, st] : {std::tuple{"HOV", c.hov, c.hov_status}, std::tuple{"HOT", c.hot, c.hot_status}}) {
        std::printf("%s run%s\n", label, st == RunStatus::Gridlock ? " (aborted: gridlock)" : "");
        print_lane("HOT", m.hot);
        print_lane("GP", m.gp);
        std::printf("  total delay %.6g veh h, peak gap %.6g h, revenue %.6g $\n", m.total_delay, m.peak_gap,
                    m.revenue);
    }
    std::printf("HOT - HOV: total delay %+.6g, managed-lane served %+.6g, GP served %+.6g\n", c.delta_total_delay,
                c.delta_hot_served, c.delta_gp_served);
    std::printf("peak gap ratio HOV/HOT %.6g\n", c.gap_ratio);
    return (c.hov_status == RunStatus::Completed && c.hot_status == RunStatus::Completed) ? kOk : kRuntime;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"HOT-lane pricing simulator"};
    app.require_subcommand(1);

    std::string config, out, records, model = "ue";
    double at_time = 0.0, alpha = 1.0;
    double bin_width = 1.0;

    auto* run_cmd = app.add_subcommand("run", "simulate and write the time series as CSV");
    run_cmd->add_option("--config", config, "scenario JSON")->required();
    run_cmd->add_option("--out", out, "output CSV")->required();

    auto* an = app.add_subcommand("analyze", "equilibrium and stability predictions");
    an->add_option("--config", config, "scenario JSON")->required();
    auto* at_opt = an->add_option("--at-time", at_time, "evaluation time [h]");

    auto* est = app.add_subcommand("estimate", "recover VOT information from a records CSV");
    est->add_option("--records", records, "CSV written by run")->required();
    est->add_option("--model", model, "ue or logit")->check(CLI::IsMember({"ue", "logit"}))->required();
    est->add_option("--alpha", alpha, "logit scale alpha*");
    est->add_option("--bin-width", bin_width, "x bin width for pooled CDF points [$/h]")->check(CLI::PositiveNumber);

    auto* cmp = app.add_subcommand("compare", "HOV-only versus HOT control");
    cmp->add_option("--config", config, "scenario JSON")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kConfig;
    }

    try {
        if (*run_cmd) return cmd_run(config, out);
        if (*an) return cmd_analyze(config, *at_opt ? std::optional<double>(at_time) : std::nullopt);
        if (*est) return cmd_estimate(records, model, alpha, bin_width);
        if (*cmp) return cmd_compare(config);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kConfig;
    } catch (const NotEstimable& e) {
        std::cerr << "not estimable: " << e.what() << '\n';
        return kNotEstimable;
    } catch (const GridlockError& e) {
        std::cerr << "aborted: " << e.what() << '\n';
        return kRuntime;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kRuntime;
    }
    return kOk;
}
