#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hotlane/analysis.hpp"
#include "hotlane/config.hpp"
#include "hotlane/nfd.hpp"

namespace hotlane {

struct SimulationRecord {
    double t = 0.0;
    double delta1 = 0.0, delta2 = 0.0;
    double rho1 = 0.0, rho2 = 0.0;
    double v1 = 0.0, v2 = 0.0;
    double omega = 0.0;
    double lambda = 0.0;
    double xi = 0.0;
    double a = 0.0, b = 0.0;
    double u = 0.0;
    double p = 0.0;
    double e1_tilde = 0.0, e2_tilde = 0.0, e21_tilde = 0.0;
    double g1 = 0.0, g2 = 0.0;
    double E1 = 0.0, E2 = 0.0, G1 = 0.0, G2 = 0.0;
    Phase phase1 = Phase::SUC, phase2 = Phase::SUC;
    bool hot_clamp = false;   // jam cap cut HOT inflow this step
    bool gp_clamp = false;
    bool toll_clamp = false;  // a omega + b < 0
};

enum class RunStatus { Completed, Gridlock };

struct RunResult {
    std::vector<SimulationRecord> records;
    RunStatus status = RunStatus::Completed;
    std::string message;  // diagnostic when aborted
    double abort_time = 0.0;
    long steps = 0;
};

/// Closed loop: demand, speeds and omega, toll, lane choice, bathtub step,
/// controller update. Rows are emitted every `output_every_steps` steps plus a
/// terminal row. HOT gridlock stops the run with status Gridlock.
RunResult run(const ScenarioConfig& cfg);

struct LaneMetrics {
    double delay = 0.0;        // int delta (1 - v/u_f) dt [veh h]
    double served = 0.0;       // G(T)
    double initiated = 0.0;    // E(T)
    double mean_travel_time = 0.0;  // int (E - G) dt / G(T) [h]
};

struct Metrics {
    LaneMetrics hot;
    LaneMetrics gp;
    double total_delay = 0.0;
    double max_omega = 0.0;    // [h/length]
    double peak_gap = 0.0;     // D max omega [h per mean trip]
    double revenue = 0.0;      // int u e21 D dt [$]
};

/// Trapezoidal integration over the emitted rows. Throws DomainError on an empty stream.
Metrics metrics(const std::vector<SimulationRecord>& records, const ScenarioConfig& cfg);

struct Comparison {
    Metrics hov;
    Metrics hot;
    RunStatus hov_status = RunStatus::Completed;
    RunStatus hot_status = RunStatus::Completed;
    // hot minus hov
    double delta_total_delay = 0.0;
    double delta_hot_served = 0.0;
    double delta_gp_served = 0.0;
    double gap_ratio = 0.0;  // hov peak gap / hot peak gap
};

/// Same config run in HOV and HOT mode, concurrently.
Comparison compare_hov_hot(const ScenarioConfig& cfg);

struct LoopAnalysis {
    double t = 0.0;
    double omega = 0.0;
    ClosedLoopCoefficients coefficients;
    StabilityReport below;  // J from the SUC side
    StabilityReport above;  // J from the SOC side
};

struct AnalysisReport {
    A1Check a1;
    std::optional<EquilibriumPrediction> equilibrium;
    std::string equilibrium_error;
    std::optional<LoopAnalysis> loop;
    std::string loop_error;
};

/// Static predictions for the config's demand at `at_time` (default: horizon),
/// plus the linearised loop evaluated with omega taken from a simulation up to that time.
AnalysisReport analyze(const ScenarioConfig& cfg, std::optional<double> at_time = std::nullopt);

}  // namespace hotlane
