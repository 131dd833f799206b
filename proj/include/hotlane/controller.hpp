#pragma once

namespace hotlane {

struct ControllerGains {
    double k1 = 8.0;  // a from lambda
    double k2 = 5.0;  // a from xi
    double k3 = 8.0;  // b from lambda
    double k4 = 6.0;  // b from xi

    /// All gains must be strictly positive for the sign logic to hold.
    void validate() const;
};

/// Toll u = a omega + b, with a [$/h] and b [$/length] driven by integral
/// action on the excess density lambda and the residual service rate xi
/// towards the reference (0, 0).
struct ControllerState {
    double a = 0.0;
    double b = 0.0;
    ControllerGains gains;
};

struct TollSettings {
    double ceiling = 1.0e3;  // toll used while omega is unbounded [$/length]
};

struct TollDecision {
    double u = 0.0;
    bool clamped = false;  // a omega + b < 0, floored at 0
};

TollDecision toll(const ControllerState& ctrl, double omega, const TollSettings& settings = {});

/// One integral update: a += dt (K1 lambda - K2 xi), b += dt (K3 lambda - K4 xi).
/// a and b are never clamped; only the toll is.
ControllerState update(const ControllerState& ctrl, double lambda, double xi, double dt);

}  // namespace hotlane
