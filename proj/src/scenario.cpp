#include "hotlane/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>

#include "hotlane/bathtub.hpp"
#include "hotlane/error.hpp"

namespace hotlane {

namespace {

CorridorState initial_state(const ScenarioConfig& cfg) {
    CorridorState s;
    const auto& g = cfg.geometry;
    s.hot = {cfg.delta1_0, g.hot_lanes, g.corridor_length, g.mean_trip_distance};
    s.gp = {cfg.delta2_0, g.gp_lanes, g.corridor_length, g.mean_trip_distance};
    s.time = 0.0;
    return s;
}

// Everything observable at the current state before stepping.
struct Snapshot {
    SimulationRecord rec;
    Inflows inflows;
};

Snapshot observe(const ScenarioConfig& cfg, const CorridorState& s, const ControllerState& ctrl) {
    Snapshot snap;
    SimulationRecord& r = snap.rec;
    r.t = s.time;
    r.delta1 = s.hot.delta;
    r.delta2 = s.gp.delta;
    r.rho1 = density(s.hot);
    r.rho2 = density(s.gp);
    r.v1 = speed(cfg.fd_hot, r.rho1);
    r.v2 = speed(cfg.fd_gp, r.rho2);
    r.phase1 = classify_phase(cfg.fd_hot, r.rho1);
    r.phase2 = classify_phase(cfg.fd_gp, r.rho2);
    try {
        r.omega = travel_time_gap(r.v1, r.v2);
    } catch (const GridlockError& e) {
        throw GridlockError(e.what(), s.time);
    }
    r.a = ctrl.a;
    r.b = ctrl.b;

    const DemandRates d = cfg.demand.at(s.time);
    r.e1_tilde = d.e1_tilde;
    r.e2_tilde = d.e2_tilde;
    if (cfg.mode == Mode::Hov) {
        r.u = 0.0;
        r.p = 0.0;
    } else {
        const TollDecision td = toll(ctrl, r.omega, cfg.toll);
        r.u = td.u;
        r.toll_clamp = td.clamped;
        r.p = cfg.choice.share(r.u, r.omega);
    }
    r.e21_tilde = split_inflow(d.e2_tilde, r.p).e21_tilde;
    r.g1 = exit_rate(s.hot, cfg.fd_hot);
    r.g2 = exit_rate(s.gp, cfg.fd_gp);
    r.lambda = r.rho1 - critical_density(cfg.fd_hot);
    r.xi = r.g1 - (r.e1_tilde + r.e21_tilde);
    snap.inflows = {r.e1_tilde, r.e2_tilde, r.e21_tilde};
    return snap;
}

}  // namespace

RunResult run(const ScenarioConfig& cfg) {
    RunResult out;
    CorridorState state = initial_state(cfg);
    ControllerState ctrl = cfg.controller;
    const long n = cfg.total_steps();
    const int every = cfg.output_every_steps;
    const double ctrl_dt = cfg.dt * cfg.controller_every_steps;
    StepOptions opts;
    opts.jam_clamp = cfg.jam_clamp;
    double E1 = 0.0, E2 = 0.0, G1 = 0.0, G2 = 0.0;
    out.records.reserve(static_cast<std::size_t>(n / every + 2));

    try {
        for (long k = 0; k <= n; ++k) {
            // keep time as k dt rather than a running sum so rows stay exact
            state.time = static_cast<double>(k) * cfg.dt;
            Snapshot snap = observe(cfg, state, ctrl);
            SimulationRecord& r = snap.rec;
            r.E1 = E1;
            r.E2 = E2;
            r.G1 = G1;
            r.G2 = G2;
            if (k == n) {
                out.records.push_back(r);
                break;
            }
            const StepResult res = step(state, cfg.fd_hot, cfg.fd_gp, snap.inflows, cfg.dt, opts);
            r.hot_clamp = res.flows.hot_clamped;
            r.gp_clamp = res.flows.gp_clamped;
            if (k % every == 0) out.records.push_back(r);

            E1 += cfg.dt * res.flows.admitted_hot;
            E2 += cfg.dt * res.flows.admitted_gp;
            G1 += cfg.dt * res.flows.exit_hot;
            G2 += cfg.dt * res.flows.exit_gp;
            state = res.state;
            if (cfg.mode == Mode::Hot && (k + 1) % cfg.controller_every_steps == 0) {
                ctrl = update(ctrl, r.lambda, r.xi, ctrl_dt);
            }
            ++out.steps;
        }
    } catch (const GridlockError& e) {
        out.status = RunStatus::Gridlock;
        out.abort_time = e.time();
        out.message = std::string(e.what()) + " at t = " + std::to_string(e.time()) + " h";
    }
    return out;
}

Metrics metrics(const std::vector<SimulationRecord>& rs, const ScenarioConfig& cfg) {
    if (rs.empty()) throw DomainError("metrics need at least one record");
    Metrics m;
    const double uf1 = cfg.fd_hot.u_f;
    const double uf2 = cfg.fd_gp.u_f;
    const double D = cfg.geometry.mean_trip_distance;

    double acc_d1 = 0.0, acc_d2 = 0.0, acc_q1 = 0.0, acc_q2 = 0.0, acc_rev = 0.0;
    for (std::size_t i = 1; i < rs.size(); ++i) {
        const auto& x = rs[i - 1];
        const auto& y = rs[i];
        const double h = 0.5 * (y.t - x.t);
        acc_d1 += h * (x.delta1 * (1.0 - x.v1 / uf1) + y.delta1 * (1.0 - y.v1 / uf1));
        acc_d2 += h * (x.delta2 * (1.0 - x.v2 / uf2) + y.delta2 * (1.0 - y.v2 / uf2));
        acc_q1 += h * ((x.E1 - x.G1) + (y.E1 - y.G1));
        acc_q2 += h * ((x.E2 - x.G2) + (y.E2 - y.G2));
        acc_rev += h * D * (x.u * x.e21_tilde + y.u * y.e21_tilde);
    }
    const auto& first = rs.front();
    const auto& last = rs.back();
    // occupancy carried in from the initial state counts toward the area as well
    acc_q1 += first.delta1 * (last.t - first.t);
    acc_q2 += first.delta2 * (last.t - first.t);
    auto lane = [](double delay, double served, double initiated, double area) {
        LaneMetrics l;
        l.delay = std::max(0.0, delay);
        l.served = served;
        l.initiated = initiated;
        l.mean_travel_time = served > 0.0 ? area / served : std::numeric_limits<double>::quiet_NaN();
        return l;
    };
    m.hot = lane(acc_d1, last.G1 - first.G1, last.E1 - first.E1, acc_q1);
    m.gp = lane(acc_d2, last.G2 - first.G2, last.E2 - first.E2, acc_q2);
    m.total_delay = m.hot.delay + m.gp.delay;
    for (const auto& r : rs) m.max_omega = std::max(m.max_omega, r.omega);
    m.peak_gap = D * m.max_omega;
    m.revenue = acc_rev;
    return m;
}

Comparison compare_hov_hot(const ScenarioConfig& cfg) {
    ScenarioConfig hov = cfg;
    hov.mode = Mode::Hov;
    ScenarioConfig hot = cfg;
    hot.mode = Mode::Hot;

    auto job = [](ScenarioConfig c) {
        RunResult r = run(c);
        return std::make_pair(metrics(r.records, c), r.status);
    };
    auto f_hov = std::async(std::launch::async, job, hov);
    auto f_hot = std::async(std::launch::async, job, hot);
    const auto [m_hov, s_hov] = f_hov.get();
    const auto [m_hot, s_hot] = f_hot.get();

    Comparison c;
    c.hov = m_hov;
    c.hot = m_hot;
    c.hov_status = s_hov;
    c.hot_status = s_hot;
    c.delta_total_delay = m_hot.total_delay - m_hov.total_delay;
    c.delta_hot_served = m_hot.hot.served - m_hov.hot.served;
    c.delta_gp_served = m_hot.gp.served - m_hov.gp.served;
    c.gap_ratio = m_hot.peak_gap > 0.0 ? m_hov.peak_gap / m_hot.peak_gap
                                       : std::numeric_limits<double>::infinity();
    return c;
}

AnalysisReport analyze(const ScenarioConfig& cfg, std::optional<double> at_time) {
    AnalysisReport rep;
    const double t = at_time.value_or(cfg.horizon);
    if (!(t >= 0.0)) throw ConfigError("analysis time must be non-negative");
    const DemandRates d = cfg.demand.at(t);
    rep.a1 = check_a1(cfg.geometry, cfg.fd_hot, cfg.fd_gp, d.e1_tilde, d.e2_tilde);
    try {
        rep.equilibrium = predict_equilibrium(cfg.geometry, cfg.fd_hot, cfg.fd_gp, d.e1_tilde, d.e2_tilde);
    } catch (const std::exception& e) {
        rep.equilibrium_error = e.what();
    }

    ScenarioConfig sim = cfg;
    sim.mode = Mode::Hot;
    sim.horizon = t;
    sim.output_every_steps = std::max<long>(1, sim.total_steps());
    const RunResult rr = run(sim);
    if (rr.status != RunStatus::Completed || rr.records.empty()) {
        rep.loop_error = "simulation up to t aborted: " + rr.message;
        return rep;
    }
    const double omega = rr.records.back().omega;
    if (!(omega > 0.0) || is_unbounded(omega)) {
        rep.loop_error = "omega(t) is not positive and finite; loop coefficients undefined";
        return rep;
    }
    try {
        const FlowBalance bal{cfg.fd_hot, cfg.geometry.hot_lane_length(), cfg.geometry.mean_trip_distance,
                              d.e1_tilde, d.e2_tilde};
        const double p = bal.share(0.0, 0.0);
        if (!(p > 0.0 && p < 1.0)) {
            rep.loop_error = "equilibrium share outside (0, 1); choice model cannot be inverted";
            return rep;
        }
        LoopAnalysis la;
        la.t = t;
        la.omega = omega;
        la.coefficients = closed_loop_coefficients(cfg.choice, bal, omega);
        const auto& g = cfg.controller.gains;
        const double L1 = cfg.geometry.hot_lane_length();
        la.below = stability_check(linearized_matrix(la.coefficients.H, la.coefficients.J_suc, g.k1, g.k2, L1));
        la.above = stability_check(linearized_matrix(la.coefficients.H, la.coefficients.J_soc, g.k1, g.k2, L1));
        rep.loop = la;
    } catch (const std::exception& e) {
        rep.loop_error = e.what();
    }
    return rep;
}

}  // namespace hotlane
