#pragma once

#include <string>
#include <vector>

namespace hotlane {

struct DemandRates {
    double e1_tilde = 0.0;  // HOV [veh/h]
    double e2_tilde = 0.0;  // SOV [veh/h]
};

struct Breakpoint {
    double t = 0.0;
    DemandRates rates;
};

/// Trip initiation rates over time. Trapezoids are stored as piecewise-linear
/// breakpoints; beyond the last breakpoint the last rates hold.
class DemandProfile {
public:
    enum class Kind { Constant, Trapezoid, PiecewiseLinear };

    static DemandProfile constant(DemandRates rates);
    /// Zero before ramp_up_start, linear up to the peak at ramp_up_end, flat to
    /// plateau_end, linear down to zero at ramp_down_end.
    static DemandProfile trapezoid(double ramp_up_start, double ramp_up_end, double plateau_end,
                                   double ramp_down_end, DemandRates peak);
    /// Breakpoint times strictly increasing, rates non-negative.
    static DemandProfile piecewise_linear(std::vector<Breakpoint> points);

    DemandRates at(double t) const;
    /// Largest rates anywhere on [0, horizon] (componentwise).
    DemandRates peak(double horizon) const;
    Kind kind() const noexcept { return kind_; }
    const std::vector<Breakpoint>& breakpoints() const noexcept { return points_; }
    std::string describe() const;

private:
    Kind kind_ = Kind::Constant;
    std::vector<Breakpoint> points_;
};

}  // namespace hotlane
