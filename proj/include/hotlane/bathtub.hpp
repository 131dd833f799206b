#pragma once

#include <limits>

#include "hotlane/nfd.hpp"

namespace hotlane {

/// One lane group (HOT or GP) of the corridor, modelled as a Vickrey bathtub
/// with exponentially distributed trip distances of mean `mean_remaining_distance`.
struct BathtubState {
    double delta = 0.0;                    // active trips [veh]
    double num_lanes = 1.0;                // l_i
    double corridor_length = 1.0;          // L0 [length]
    double mean_remaining_distance = 5.0;  // D [length]

    double lane_length() const noexcept { return num_lanes * corridor_length; }
    void validate() const;
};

struct CorridorState {
    BathtubState hot;
    BathtubState gp;
    double time = 0.0;  // [h]
};

/// Trip initiation rates for one step [veh/h].
struct Inflows {
    double e1_tilde = 0.0;   // HOVs
    double e2_tilde = 0.0;   // SOVs
    double e21_tilde = 0.0;  // SOVs that pay and use the HOT lanes

    double hot() const noexcept { return e1_tilde + e21_tilde; }
    double gp() const noexcept { return e2_tilde - e21_tilde; }
    void validate() const;
};

/// Whether active trips are capped at rho_j * L_i after each step.
/// `Auto` caps only triangular diagrams, where jam density is absorbing; the ATFD
/// keeps a positive exit rate at any density so its trip count is left uncapped.
enum class JamClamp { Auto, On, Off };

struct StepOptions {
    JamClamp jam_clamp = JamClamp::Auto;
};

/// Flows realised during one step, after clamping.
struct StepFlows {
    double admitted_hot = 0.0;  // veh/h actually entering each bathtub
    double admitted_gp = 0.0;
    double exit_hot = 0.0;      // veh/h actually completing
    double exit_gp = 0.0;
    bool hot_clamped = false;
    bool gp_clamped = false;
};

struct StepResult {
    CorridorState state;
    StepFlows flows;
};

/// Sentinel for an unbounded travel-time gap (jammed GP lanes).
inline constexpr double kUnbounded = std::numeric_limits<double>::infinity();

inline bool is_unbounded(double omega) noexcept { return omega == kUnbounded; }

double density(const BathtubState& state);

/// Trip completion rate g = (delta / D) V(delta / L).
double exit_rate(const BathtubState& state, const FdParams& fd);

/// Explicit Euler step of both bathtubs. Inflow is admitted first (on-ramp
/// priority); when the jam cap applies the admitted inflow is cut so the trip
/// count never exceeds rho_j * L_i, keeping E - G = delta - delta(0) exact.
StepResult step(const CorridorState& corridor, const FdParams& fd_hot, const FdParams& fd_gp,
                const Inflows& inflows, double dt, const StepOptions& options = {});

/// lambda = rho_1 - rho_c.
double excess_density(const BathtubState& state, const FdParams& fd);

/// xi = g_1 - e_1, positive when the HOT lanes can absorb more inflow.
double residual_service_rate(const BathtubState& state, const FdParams& fd, double e1);

/// omega = 1/v2 - 1/v1 per unit distance. Returns kUnbounded for v2 = 0;
/// throws GridlockError when v1 = 0.
double travel_time_gap(double v1, double v2);

/// x / v; kUnbounded for v = 0.
double per_vehicle_travel_time(double distance, double v);

/// Per-vehicle charge for a distance-based toll u over a trip of length x.
double per_vehicle_toll(double toll_per_length, double distance);

}  // namespace hotlane
