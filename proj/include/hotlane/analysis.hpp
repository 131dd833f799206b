#pragma once

#include <array>
#include <complex>
#include <string>
#include <vector>

#include "hotlane/bathtub.hpp"
#include "hotlane/controller.hpp"
#include "hotlane/lane_choice.hpp"
#include "hotlane/nfd.hpp"

namespace hotlane {

struct CorridorGeometry {
    double corridor_length = 1.0;  // L0
    double hot_lanes = 1.0;        // l1
    double gp_lanes = 1.0;         // l2
    double mean_trip_distance = 5.0;  // D = D~ (memoryless trip distances)

    double hot_lane_length() const noexcept { return hot_lanes * corridor_length; }
    double gp_lane_length() const noexcept { return gp_lanes * corridor_length; }
    void validate() const;
};

/// Demand conditions under which the controller is analysed: HOVs alone do not
/// saturate the HOT lanes, SOVs alone oversaturate the GP lanes, and total
/// demand exceeds the joint capacity.
struct A1Check {
    bool hov_below_hot_capacity = false;   // e1 D < L0 C1
    bool sov_above_gp_capacity = false;    // e2 D > L0 C2
    bool total_above_joint_capacity = false;  // (e1 + e2) D > L0 (C1 + C2)

    bool holds() const noexcept {
        return hov_below_hot_capacity && sov_above_gp_capacity && total_above_joint_capacity;
    }
    /// Human-readable list of the failed inequalities; empty when all hold.
    std::string failures() const;
};

A1Check check_a1(const CorridorGeometry& geom, const FdParams& fd_hot, const FdParams& fd_gp,
                 double e1_tilde, double e2_tilde);

/// p0 = (L1 rho_c u_f - e1 D) / (D e2): the paying share that keeps the HOT lanes
/// exactly at critical density. Throws PreconditionError when the result leaves
/// [0, 1], naming the violated inequality.
double equilibrium_share(double L1, double rho_c, double u_f, double D, double e1_tilde,
                         double e2_tilde);

/// Closed-form GP trip count under the triangular diagram with the HOT lanes held critical.
double triangular_growth(double delta2_0, double p0, double e2_tilde, double w, double D,
                         double rho_j, double L2, double t);

struct AtfdGrowthInputs {
    double e2_tilde = 0.0;
    double p0 = 0.0;
    double c = 0.0;          // per-lane flow floor of the GP diagram
    double gp_lanes = 1.0;   // l2
    double corridor_length = 1.0;  // L0
    double D = 5.0;
    double delta2_t0 = 0.0;  // GP trips when the floor starts binding
    double u_f = 100.0;      // HOT free-flow speed (HOT held critical)
};

/// Linear regime once the GP lanes sit on the ATFD flow floor.
struct AtfdGrowth {
    double omega0 = 0.0;       // e2 (1 - p0) / (c l2) - L0 / D (dimensionless)
    double trip_slope = 0.0;   // d delta2 / dt = omega0 c l2 [veh/h]
    double omega_slope = 0.0;  // d omega / dt = omega0 / L0 [h/length per h]
    double omega1 = 0.0;       // omega at t0: delta2(t0) / (c L2) - 1 / u_f
};

AtfdGrowth atfd_growth_rates(const AtfdGrowthInputs& in);

enum class GrowthRegime { Exponential, Linear };

struct EquilibriumPrediction {
    double p0 = 0.0;
    GrowthRegime regime = GrowthRegime::Exponential;
    AtfdGrowth growth;  // meaningful for the linear regime only
    A1Check a1;
};

/// Combines the A1 check, p0, and (for an ATFD GP diagram) the linear growth
/// rates measured from the moment the floor starts binding.
EquilibriumPrediction predict_equilibrium(const CorridorGeometry& geom, const FdParams& fd_hot,
                                          const FdParams& fd_gp, double e1_tilde, double e2_tilde);

struct LinearizedSystem {
    std::array<std::array<double, 2>, 2> m{};  // acts on (xi, lambda)
    double H = 0.0;
    double J = 0.0;
};

/// [[(J - K2 L1)/(L1 H), K1/H], [-1/L1, 0]]. Throws DomainError for H <= 0 or L1 <= 0.
LinearizedSystem linearized_matrix(double H, double J, double K1, double K2, double L1);

struct StabilityReport {
    bool stable = false;
    std::array<std::complex<double>, 2> eigenvalues{};
    double trace = 0.0;
    double determinant = 0.0;
};

/// Eigenvalues from the characteristic polynomial s^2 - tr s + det.
StabilityReport stability_check(const LinearizedSystem& sys);

/// Completion rate of the two-lane-group corridor as a function of how a total
/// per-lane density is split, for a triangular diagram and l1 = l2 = l.
class OutflowSplit {
public:
    OutflowSplit(double rho_tot, const FdParams& fd, double L0, double lanes, double D);

    /// Full outflow g(rho1) = (L0 l / D) (q(rho1) + q(rho_tot - rho1)).
    double total(double rho1) const;
    /// HOT uncongested, GP congested branch.
    double g_a(double rho1) const;
    /// HOT congested, GP uncongested branch.
    double g_b(double rho1) const;
    /// Both congested; independent of the split.
    double g_c() const;

    /// Feasible split range [max(0, rho_tot - rho_j), min(rho_j, rho_tot)].
    double rho1_min() const noexcept { return lo_; }
    double rho1_max() const noexcept { return hi_; }

    /// Closed interval of rho1 attaining the maximum outflow.
    std::array<double, 2> argmax_interval() const;
    bool in_argmax(double rho1, double tolerance) const;
    double max_outflow() const;

    /// rho_tot outside (rho_c, 2 rho_j): the over-capacity lemma does not apply.
    bool a1_inapplicable() const noexcept { return warn_; }

private:
    double rho_tot_;
    FdParams fd_;
    double scale_;  // L0 l / D
    double rc_;
    double lo_;
    double hi_;
    bool warn_;
};

/// HOT-lane flow balance p = (g1(lambda) - e1 - xi) / e2.
struct FlowBalance {
    FdParams fd;
    double L1 = 1.0;
    double D = 5.0;
    double e1_tilde = 0.0;
    double e2_tilde = 0.0;

    double share(double lambda, double xi) const;
};

enum class SensitivityDirection { Xi, Lambda };

struct Sensitivity {
    double backward = 0.0;
    double forward = 0.0;
    double central = 0.0;
};

/// Finite-difference derivative of the flow-balance share at (lambda, xi).
Sensitivity choice_sensitivity(const FlowBalance& balance, double lambda, double xi,
                               SensitivityDirection direction, double step = 1e-6);

/// Coefficients of the linearised closed loop at the optimal state for a
/// concrete lane-choice model, differentiated numerically from u = A omega + B.
struct ClosedLoopCoefficients {
    double H = 0.0;
    double J_suc = 0.0;  // one-sided derivative from below critical
    double J_soc = 0.0;  // one-sided derivative from above critical
    double omega = 0.0;  // omega(t) used for the B terms
};

ClosedLoopCoefficients closed_loop_coefficients(const ChoiceModel& model, const FlowBalance& balance,
                                                double omega, double step = 1e-6);

}  // namespace hotlane
