#include "hotlane/nfd.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hotlane/error.hpp"

namespace hotlane {

void FdParams::validate() const {
    if (!(u_f > 0.0) || !(w > 0.0) || !(rho_j > 0.0)) {
        throw DomainError("fundamental diagram requires u_f, w, rho_j > 0");
    }
    const double c0 = u_f * w * rho_j / (u_f + w);
    // small slack so that c = C0 computed elsewhere still validates
    if (!(c >= 0.0) || c > c0 * (1.0 + 1e-12)) {
        throw DomainError("flow floor c must lie in [0, C0], got c = " + std::to_string(c));
    }
}

FdParams FdParams::with_floor_fraction(double u_f, double w, double rho_j, double fraction) {
    FdParams p{u_f, w, rho_j, 0.0};
    p.c = fraction * capacity(p);
    p.validate();
    return p;
}

std::string_view to_string(Phase phase) noexcept {
    switch (phase) {
        case Phase::SUC: return "SUC";
        case Phase::C: return "C";
        case Phase::SOC: return "SOC";
    }
    return "?";
}

double critical_density(const FdParams& params) {
    params.validate();
    return params.w * params.rho_j / (params.u_f + params.w);
}

double capacity(const FdParams& params) {
    return params.u_f * critical_density(params);
}

double floor_onset_density(const FdParams& params) {
    params.validate();
    return params.rho_j - params.c / params.w;
}

double speed(const FdParams& params, double rho) {
    if (rho < 0.0 || std::isnan(rho)) {
        throw DomainError("density must be non-negative");
    }
    if (rho == 0.0) {
        return params.u_f;
    }
    const double congested = std::max(params.w * (params.rho_j - rho), params.c) / rho;
    return std::min(params.u_f, std::max(congested, 0.0));
}

double flow(const FdParams& params, double rho) {
    if (rho < 0.0 || std::isnan(rho)) {
        throw DomainError("density must be non-negative");
    }
    return std::min(params.u_f * rho, std::max({params.w * (params.rho_j - rho), params.c, 0.0}));
}

Phase classify_phase(const FdParams& params, double rho, double tolerance) {
    if (rho < 0.0 || std::isnan(rho)) {
        throw DomainError("density must be non-negative");
    }
    const double rc = critical_density(params);
    if (std::abs(rho - rc) <= tolerance) {
        return Phase::C;
    }
    return rho < rc ? Phase::SUC : Phase::SOC;
}

}  // namespace hotlane
