#include "hotlane/demand.hpp"

#include <algorithm>
#include <sstream>

#include "hotlane/error.hpp"

namespace hotlane {

namespace {

void check_rates(const DemandRates& r) {
    if (!(r.e1_tilde >= 0.0) || !(r.e2_tilde >= 0.0)) {
        throw ConfigError("demand rates must be non-negative");
    }
}

}  // namespace

DemandProfile DemandProfile::constant(DemandRates rates) {
    check_rates(rates);
    DemandProfile d;
    d.kind_ = Kind::Constant;
    d.points_ = {{0.0, rates}};
    return d;
}

DemandProfile DemandProfile::trapezoid(double ramp_up_start, double ramp_up_end, double plateau_end,
                                       double ramp_down_end, DemandRates peak) {
    check_rates(peak);
    if (!(ramp_up_start >= 0.0 && ramp_up_start <= ramp_up_end && ramp_up_end <= plateau_end &&
          plateau_end <= ramp_down_end)) {
        throw ConfigError("trapezoid times must satisfy 0 <= start <= up_end <= plateau_end <= down_end");
    }
    DemandProfile d;
    d.kind_ = Kind::Trapezoid;
    // duplicated times encode vertical edges; at() takes the later point
    d.points_ = {{ramp_up_start, {}}, {ramp_up_end, peak}, {plateau_end, peak}, {ramp_down_end, {}}};
    return d;
}

DemandProfile DemandProfile::piecewise_linear(std::vector<Breakpoint> points) {
    if (points.empty()) throw ConfigError("piecewise-linear demand needs at least one breakpoint");
    for (std::size_t i = 0; i < points.size(); ++i) {
        check_rates(points[i].rates);
        if (i > 0 && !(points[i].t > points[i - 1].t)) {
            throw ConfigError("piecewise-linear breakpoints must be strictly increasing in time");
        }
    }
    DemandProfile d;
    d.kind_ = Kind::PiecewiseLinear;
    d.points_ = std::move(points);
    return d;
}

DemandRates DemandProfile::at(double t) const {
    if (kind_ == Kind::Constant) return points_.front().rates;
    if (t < points_.front().t) {
        return kind_ == Kind::Trapezoid ? DemandRates{} : points_.front().rates;
    }
    // first breakpoint strictly after t
    auto it = std::upper_bound(points_.begin(), points_.end(), t,
                               [](double v, const Breakpoint& b) { return v < b.t; });
    if (it == points_.end()) return points_.back().rates;
    const auto& b = *it;
    const auto& a = *(it - 1);
    const double s = (t - a.t) / (b.t - a.t);
    return {a.rates.e1_tilde + s * (b.rates.e1_tilde - a.rates.e1_tilde),
            a.rates.e2_tilde + s * (b.rates.e2_tilde - a.rates.e2_tilde)};
}

DemandRates DemandProfile::peak(double horizon) const {
    DemandRates p = at(0.0);
    for (const auto& b : points_) {
        if (b.t > horizon) break;
        p.e1_tilde = std::max(p.e1_tilde, b.rates.e1_tilde);
        p.e2_tilde = std::max(p.e2_tilde, b.rates.e2_tilde);
    }
    const DemandRates end = at(horizon);
    p.e1_tilde = std::max(p.e1_tilde, end.e1_tilde);
    p.e2_tilde = std::max(p.e2_tilde, end.e2_tilde);
    return p;
}

std::string DemandProfile::describe() const {
    std::ostringstream os;
    switch (kind_) {
        case Kind::Constant:
            os << "constant e1=" << points_[0].rates.e1_tilde << " e2=" << points_[0].rates.e2_tilde;
            break;
        case Kind::Trapezoid:
            os << "trapezoid " << points_[0].t << "-" << points_[1].t << "-" << points_[2].t << "-"
               << points_[3].t << " h, peak e1=" << points_[1].rates.e1_tilde
               << " e2=" << points_[1].rates.e2_tilde;
            break;
        case Kind::PiecewiseLinear:
            os << "piecewise-linear, " << points_.size() << " breakpoints";
            break;
    }
    return os.str();
}

}  // namespace hotlane
