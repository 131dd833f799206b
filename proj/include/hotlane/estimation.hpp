#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace hotlane {

/// What a roadside operator sees at one instant.
struct Observation {
    double time = 0.0;
    double u = 0.0;          // toll [$/length]
    double omega = 0.0;      // travel-time gap [h/length]
    double e2_tilde = 0.0;   // SOV arrivals [veh/h]
    double e21_tilde = 0.0;  // of which paying [veh/h]
};

struct CdfPoint {
    double x = 0.0;      // u / omega [$/h]
    double F_hat = 0.0;  // 1 - e21/e2
};

/// Single-observation estimate of the VOT distribution function at u/omega.
/// Throws NotEstimable for omega <= 0 (or unbounded), e2 = 0, or e21 outside [0, e2].
CdfPoint estimate_cdf_point(const Observation& obs);

/// Common-VOT estimate under logit choice. Needs 0 < e21 < e2 and omega > 0.
double estimate_logit_vot(const Observation& obs, double alpha_star = 1.0);

struct PooledCdfPoint {
    double x = 0.0;  // mean abscissa of the bin
    double F_hat = 0.0;
    std::size_t count = 0;
};

/// Groups the estimable observations into x bins [k w, (k+1) w) and averages x
/// and F_hat within each. Narrow bins keep the average close to the curve.
/// Throws NotEstimable if no observation is usable.
std::vector<PooledCdfPoint> pool_cdf_points(const std::vector<Observation>& obs, double bin_width = 1.0);

struct LogitVotSummary {
    double mean = 0.0;
    double median = 0.0;
    std::size_t used = 0;
    std::size_t skipped = 0;
};

/// Point estimates over all interior observations (0 < e21 < e2, omega > 0).
std::vector<std::pair<double, double>> logit_vot_series(const std::vector<Observation>& obs,
                                                        double alpha_star = 1.0);

/// Throws NotEstimable if no observation is interior.
LogitVotSummary summarize_logit_vot(const std::vector<Observation>& obs, double alpha_star = 1.0);

}  // namespace hotlane
