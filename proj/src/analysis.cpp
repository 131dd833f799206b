#include "hotlane/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "hotlane/error.hpp"

namespace hotlane {

void CorridorGeometry::validate() const {
    if (!(corridor_length > 0.0)) throw ConfigError("corridor length must be positive");
    if (!(hot_lanes >= 1.0) || !(gp_lanes >= 1.0)) throw ConfigError("each lane group needs at least one lane");
    if (!(mean_trip_distance > 0.0)) throw ConfigError("mean trip distance must be positive");
}

std::string A1Check::failures() const {
    std::ostringstream os;
    const char* sep = "";
    if (!hov_below_hot_capacity) { os << sep << "e1*D < L0*C1"; sep = "; "; }
    if (!sov_above_gp_capacity) { os << sep << "e2*D > L0*C2"; sep = "; "; }
    if (!total_above_joint_capacity) { os << sep << "(e1+e2)*D > L0*(C1+C2)"; }
    return os.str();
}

A1Check check_a1(const CorridorGeometry& geom, const FdParams& fd_hot, const FdParams& fd_gp,
                 double e1_tilde, double e2_tilde) {
    const double D = geom.mean_trip_distance;
    const double hot_service = geom.corridor_length * capacity(fd_hot) * geom.hot_lanes;
    const double gp_service = geom.corridor_length * capacity(fd_gp) * geom.gp_lanes;
    A1Check out;
    out.hov_below_hot_capacity = e1_tilde * D < hot_service;
    out.sov_above_gp_capacity = e2_tilde * D > gp_service;
    out.total_above_joint_capacity = (e1_tilde + e2_tilde) * D > hot_service + gp_service;
    return out;
}

double equilibrium_share(double L1, double rho_c, double u_f, double D, double e1_tilde,
                         double e2_tilde) {
    if (!(e2_tilde > 0.0)) throw PreconditionError("equilibrium share needs SOV demand e2 > 0");
    if (!(D > 0.0) || !(L1 > 0.0)) throw DomainError("L1 and D must be positive");
    const double hot_service = L1 * rho_c * u_f;
    const double p0 = (hot_service - e1_tilde * D) / (D * e2_tilde);
    if (p0 < 0.0) {
        throw PreconditionError("A1 violated: e1*D <= L0*C1 fails (HOVs alone oversaturate the HOT lanes)");
    }
    if (p0 > 1.0) {
        throw PreconditionError(
            "A1 violated: (e1+e2)*D >= L0*C1 fails (total demand cannot fill the HOT lanes)");
    }
    return p0;
}

double triangular_growth(double delta2_0, double p0, double e2_tilde, double w, double D,
                         double rho_j, double L2, double t) {
    const double shift = D * e2_tilde * (1.0 - p0) / w - rho_j * L2;
    return (delta2_0 + shift) * std::exp(w * t / D) - shift;
}

AtfdGrowth atfd_growth_rates(const AtfdGrowthInputs& in) {
    if (!(in.c > 0.0)) throw DomainError("linear growth regime needs a positive flow floor");
    if (!(in.corridor_length > 0.0) || !(in.gp_lanes > 0.0) || !(in.D > 0.0)) {
        throw DomainError("geometry must be positive");
    }
    const double floor_flow = in.c * in.gp_lanes;  // c l2
    const double L2 = in.gp_lanes * in.corridor_length;
    AtfdGrowth g;
    g.omega0 = in.e2_tilde * (1.0 - in.p0) / floor_flow - in.corridor_length / in.D;
    g.trip_slope = g.omega0 * floor_flow;
    g.omega_slope = g.omega0 / in.corridor_length;
    g.omega1 = in.delta2_t0 / (in.c * L2) - 1.0 / in.u_f;
    return g;
}

EquilibriumPrediction predict_equilibrium(const CorridorGeometry& geom, const FdParams& fd_hot,
                                          const FdParams& fd_gp, double e1_tilde, double e2_tilde) {
    geom.validate();
    EquilibriumPrediction out;
    out.a1 = check_a1(geom, fd_hot, fd_gp, e1_tilde, e2_tilde);
    out.p0 = equilibrium_share(geom.hot_lane_length(), critical_density(fd_hot), fd_hot.u_f,
                               geom.mean_trip_distance, e1_tilde, e2_tilde);
    if (fd_gp.triangular()) {
        out.regime = GrowthRegime::Exponential;
        return out;
    }
    out.regime = GrowthRegime::Linear;
    AtfdGrowthInputs in;
    in.e2_tilde = e2_tilde;
    in.p0 = out.p0;
    in.c = fd_gp.c;
    in.gp_lanes = geom.gp_lanes;
    in.corridor_length = geom.corridor_length;
    in.D = geom.mean_trip_distance;
    in.delta2_t0 = floor_onset_density(fd_gp) * geom.gp_lane_length();
    in.u_f = fd_hot.u_f;
    out.growth = atfd_growth_rates(in);
    return out;
}

LinearizedSystem linearized_matrix(double H, double J, double K1, double K2, double L1) {
    if (!(H > 0.0)) throw DomainError("linearisation needs H > 0");
    if (!(L1 > 0.0)) throw DomainError("linearisation needs L1 > 0");
    LinearizedSystem s;
    s.H = H;
    s.J = J;
    s.m = {{{(J - K2 * L1) / (L1 * H), K1 / H}, {-1.0 / L1, 0.0}}};
    return s;
}

StabilityReport stability_check(const LinearizedSystem& sys) {
    StabilityReport r;
    const auto& m = sys.m;
    r.trace = m[0][0] + m[1][1];
    r.determinant = m[0][0] * m[1][1] - m[0][1] * m[1][0];
    const double half = 0.5 * r.trace;
    const double disc = half * half - r.determinant;
    if (disc >= 0.0) {
        // avoid cancellation: larger-magnitude root first, the other from the product
        const double sq = std::sqrt(disc);
        const double big = half >= 0.0 ? half + sq : half - sq;
        const double small = big != 0.0 ? r.determinant / big : 0.0;
        r.eigenvalues = {std::complex<double>(std::max(big, small)),
                         std::complex<double>(std::min(big, small))};
    } else {
        const double im = std::sqrt(-disc);
        r.eigenvalues = {std::complex<double>(half, im), std::complex<double>(half, -im)};
    }
    r.stable = r.eigenvalues[0].real() < 0.0 && r.eigenvalues[1].real() < 0.0;
    return r;
}

OutflowSplit::OutflowSplit(double rho_tot, const FdParams& fd, double L0, double lanes, double D)
    : rho_tot_(rho_tot), fd_(fd) {
    fd_.validate();
    if (!fd_.triangular()) throw DomainError("outflow split analysis assumes a triangular diagram");
    if (!(L0 > 0.0) || !(lanes > 0.0) || !(D > 0.0)) throw DomainError("geometry must be positive");
    if (!(rho_tot >= 0.0) || rho_tot > 2.0 * fd_.rho_j) {
        throw DomainError("total density must lie in [0, 2 rho_j]");
    }
    scale_ = L0 * lanes / D;
    rc_ = critical_density(fd_);
    lo_ = std::max(0.0, rho_tot - fd_.rho_j);
    hi_ = std::min(fd_.rho_j, rho_tot);
    warn_ = !(rho_tot > rc_ && rho_tot < 2.0 * fd_.rho_j);
}

double OutflowSplit::total(double rho1) const {
    const double rho2 = std::max(0.0, rho_tot_ - rho1);
    return scale_ * (flow(fd_, rho1) + flow(fd_, rho2));
}

double OutflowSplit::g_a(double rho1) const {
    return scale_ * (rho1 * (fd_.u_f + fd_.w) + fd_.w * (fd_.rho_j - rho_tot_));
}

double OutflowSplit::g_b(double rho1) const {
    return scale_ * (fd_.w * fd_.rho_j + fd_.u_f * rho_tot_ - rho1 * (fd_.u_f + fd_.w));
}

double OutflowSplit::g_c() const {
    return scale_ * (2.0 * fd_.w * fd_.rho_j - rho_tot_ * fd_.w);
}

std::array<double, 2> OutflowSplit::argmax_interval() const {
    if (rho_tot_ >= 2.0 * rc_) {
        // both groups on the congested branch (boundaries: one group exactly critical)
        return {std::max(lo_, rc_), std::min(hi_, rho_tot_ - rc_)};
    }
    // both groups uncongested
    return {std::max(lo_, rho_tot_ - rc_), std::min(hi_, rc_)};
}

bool OutflowSplit::in_argmax(double rho1, double tolerance) const {
    const auto [a, b] = argmax_interval();
    return rho1 >= a - tolerance && rho1 <= b + tolerance;
}

double OutflowSplit::max_outflow() const {
    const auto [a, b] = argmax_interval();
    return total(0.5 * (a + b));
}

double FlowBalance::share(double lambda, double xi) const {
    if (!(e2_tilde > 0.0)) throw DomainError("flow balance needs e2 > 0");
    const double rho = lambda + critical_density(fd);
    return (L1 / D * flow(fd, rho) - e1_tilde - xi) / e2_tilde;
}

Sensitivity choice_sensitivity(const FlowBalance& balance, double lambda, double xi,
                               SensitivityDirection direction, double step) {
    if (!(step > 0.0)) throw DomainError("finite-difference step must be positive");
    auto eval = [&](double offset) {
        return direction == SensitivityDirection::Xi ? balance.share(lambda, xi + offset)
                                                     : balance.share(lambda + offset, xi);
    };
    const double mid = eval(0.0);
    Sensitivity s;
    s.forward = (eval(step) - mid) / step;
    s.backward = (mid - eval(-step)) / step;
    s.central = 0.5 * (s.forward + s.backward);
    return s;
}

ClosedLoopCoefficients closed_loop_coefficients(const ChoiceModel& model, const FlowBalance& balance,
                                                double omega, double step) {
    if (!(omega > 0.0)) throw DomainError("closed-loop coefficients need omega > 0");
    auto generalized = [&](double xi, double lambda) {
        return model.toll_coefficients(balance.share(lambda, xi));
    };
    auto combine = [&](std::pair<double, double> hi, std::pair<double, double> lo, double width) {
        return (hi.first - lo.first) / width + (hi.second - lo.second) / width / omega;
    };
    const auto at0 = generalized(0.0, 0.0);
    ClosedLoopCoefficients c;
    c.omega = omega;
    c.H = combine(generalized(step, 0.0), generalized(-step, 0.0), 2.0 * step);
    c.J_suc = combine(at0, generalized(0.0, -step), step);
    c.J_soc = combine(generalized(0.0, step), at0, step);
    return c;
}

}  // namespace hotlane
