#pragma once

#include <string_view>

namespace hotlane {

/// Per-lane fundamental diagram. `c` is the high-density flow floor: 0 gives the
/// triangular diagram, `capacity()` gives the ramp diagram, anything between is
/// the approximate triangular diagram (ATFD).
struct FdParams {
    double u_f = 100.0;    // free-flow speed [length/h]
    double w = 20.0;       // congestion wave speed [length/h]
    double rho_j = 140.0;  // jam density [veh/length/lane]
    double c = 0.0;        // flow floor [veh/h/lane]

    /// Throws DomainError unless u_f, w, rho_j > 0 and 0 <= c <= C0.
    void validate() const;

    bool triangular() const noexcept { return c == 0.0; }

    /// Builds an ATFD whose floor is `fraction` of the per-lane capacity.
    static FdParams with_floor_fraction(double u_f, double w, double rho_j, double fraction);
};

enum class Phase { SUC, C, SOC };

std::string_view to_string(Phase phase) noexcept;

inline constexpr double kPhaseTolerance = 1e-9;

/// Minimum density at which capacity is observed: w rho_j / (u_f + w).
double critical_density(const FdParams& params);

/// C0 = u_f * rho_c [veh/h/lane].
double capacity(const FdParams& params);

/// Density where the ATFD flow floor starts binding, rho_j - c/w. Equals rho_j for c = 0.
double floor_onset_density(const FdParams& params);

/// Space-mean speed. V(0) = u_f by right-continuity.
double speed(const FdParams& params, double rho);

/// Internal flow q = rho V(rho) = min{u_f rho, max{w(rho_j - rho), c}}.
double flow(const FdParams& params, double rho);

Phase classify_phase(const FdParams& params, double rho, double tolerance = kPhaseTolerance);

}  // namespace hotlane
