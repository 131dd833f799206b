#include "hotlane/controller.hpp"

#include "hotlane/bathtub.hpp"
#include "hotlane/error.hpp"

namespace hotlane {

void ControllerGains::validate() const {
    if (!(k1 > 0.0) || !(k2 > 0.0) || !(k3 > 0.0) || !(k4 > 0.0)) {
        throw DomainError("controller gains K1..K4 must all be positive");
    }
}

TollDecision toll(const ControllerState& ctrl, double omega, const TollSettings& settings) {
    if (is_unbounded(omega)) return {settings.ceiling, false};
    const double raw = ctrl.a * omega + ctrl.b;
    if (raw < 0.0) return {0.0, true};
    return {raw, false};
}

ControllerState update(const ControllerState& ctrl, double lambda, double xi, double dt) {
    if (!(dt > 0.0)) throw DomainError("controller time step must be positive");
    ControllerState next = ctrl;
    next.a += dt * (ctrl.gains.k1 * lambda - ctrl.gains.k2 * xi);
    next.b += dt * (ctrl.gains.k3 * lambda - ctrl.gains.k4 * xi);
    return next;
}

}  // namespace hotlane
