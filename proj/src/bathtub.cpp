#include "hotlane/bathtub.hpp"

#include <algorithm>
#include <cmath>

#include "hotlane/error.hpp"

namespace hotlane {

void BathtubState::validate() const {
    if (!(delta >= 0.0)) throw DomainError("active trips must be non-negative");
    if (!(num_lanes >= 1.0)) throw DomainError("lane group needs at least one lane");
    if (!(corridor_length > 0.0)) throw DomainError("corridor length must be positive");
    if (!(mean_remaining_distance > 0.0)) throw DomainError("mean remaining distance must be positive");
}

void Inflows::validate() const {
    if (!(e1_tilde >= 0.0) || !(e2_tilde >= 0.0) || !(e21_tilde >= 0.0)) {
        throw DomainError("trip initiation rates must be non-negative");
    }
    if (e21_tilde > e2_tilde * (1.0 + 1e-12)) {
        throw DomainError("paying SOV rate exceeds SOV rate");
    }
}

double density(const BathtubState& state) {
    return state.delta / state.lane_length();
}

double exit_rate(const BathtubState& state, const FdParams& fd) {
    if (state.delta <= 0.0) return 0.0;
    return state.delta / state.mean_remaining_distance * speed(fd, density(state));
}

namespace {

bool cap_applies(const FdParams& fd, JamClamp mode) {
    switch (mode) {
        case JamClamp::On: return true;
        case JamClamp::Off: return false;
        case JamClamp::Auto: return fd.triangular();
    }
    return true;
}

struct Advanced {
    double delta;
    double admitted;
    double exited;
    bool clamped;
};

Advanced advance(const BathtubState& s, const FdParams& fd, double inflow, double dt,
                 JamClamp mode) {
    double exited = exit_rate(s, fd);
    double admitted = std::max(inflow, 0.0);
    double next = s.delta + dt * (admitted - exited);
    bool clamped = false;
    if (next < 0.0) {
        // cannot complete more trips than are active
        exited = (s.delta + dt * admitted) / dt;
        next = 0.0;
        clamped = true;
    }
    if (cap_applies(fd, mode)) {
        const double cap = fd.rho_j * s.lane_length();
        if (next > cap) {
            admitted = std::max(0.0, (cap - s.delta) / dt + exited);
            next = std::min(cap, s.delta + dt * (admitted - exited));
            clamped = true;
        }
    }
    return {next, admitted, exited, clamped};
}

}  // namespace

StepResult step(const CorridorState& corridor, const FdParams& fd_hot, const FdParams& fd_gp,
                const Inflows& inflows, double dt, const StepOptions& options) {
    if (!(dt > 0.0)) throw DomainError("time step must be positive");
    inflows.validate();

    const double e21 = std::min(inflows.e21_tilde, inflows.e2_tilde);
    const Advanced hot = advance(corridor.hot, fd_hot, inflows.e1_tilde + e21, dt, options.jam_clamp);
    const Advanced gp = advance(corridor.gp, fd_gp, inflows.e2_tilde - e21, dt, options.jam_clamp);

    StepResult out;
    out.state = corridor;
    out.state.hot.delta = hot.delta;
    out.state.gp.delta = gp.delta;
    out.state.time = corridor.time + dt;
    out.flows = {hot.admitted, gp.admitted, hot.exited, gp.exited, hot.clamped, gp.clamped};
    return out;
}

double excess_density(const BathtubState& state, const FdParams& fd) {
    return density(state) - critical_density(fd);
}

double residual_service_rate(const BathtubState& state, const FdParams& fd, double e1) {
    if (e1 < 0.0) throw DomainError("HOT inflow must be non-negative");
    return exit_rate(state, fd) - e1;
}

double travel_time_gap(double v1, double v2) {
    if (!(v1 > 0.0)) throw GridlockError("HOT lanes gridlocked (v1 = 0); toll undefined", 0.0);
    if (v2 < 0.0) throw DomainError("speed must be non-negative");
    if (v2 == 0.0) return kUnbounded;
    return 1.0 / v2 - 1.0 / v1;
}

double per_vehicle_travel_time(double distance, double v) {
    if (distance < 0.0 || v < 0.0) throw DomainError("distance and speed must be non-negative");
    if (v == 0.0) return kUnbounded;
    return distance / v;
}

double per_vehicle_toll(double toll_per_length, double distance) {
    if (distance < 0.0) throw DomainError("distance must be non-negative");
    return toll_per_length * distance;
}

}  // namespace hotlane
