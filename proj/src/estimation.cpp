#include "hotlane/estimation.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "hotlane/error.hpp"

namespace hotlane {

namespace {

bool usable_gap(double omega) { return omega > 0.0 && std::isfinite(omega); }

}  // namespace

CdfPoint estimate_cdf_point(const Observation& obs) {
    if (!usable_gap(obs.omega)) throw NotEstimable("omega must be positive and finite");
    if (!(obs.e2_tilde > 0.0)) throw NotEstimable("no SOV arrivals");
    if (obs.e21_tilde < 0.0 || obs.e21_tilde > obs.e2_tilde) {
        throw NotEstimable("paying SOV rate outside [0, e2]");
    }
    return {obs.u / obs.omega, 1.0 - obs.e21_tilde / obs.e2_tilde};
}

double estimate_logit_vot(const Observation& obs, double alpha_star) {
    if (!(alpha_star > 0.0)) throw DomainError("alpha* must be positive");
    if (!usable_gap(obs.omega)) throw NotEstimable("omega must be positive and finite");
    if (!(obs.e21_tilde > 0.0) || !(obs.e21_tilde < obs.e2_tilde)) {
        throw NotEstimable("logit estimate needs 0 < e21 < e2");
    }
    const double odds = obs.e2_tilde / obs.e21_tilde - 1.0;
    return (obs.u - std::log(odds) / alpha_star) / obs.omega;
}

std::vector<PooledCdfPoint> pool_cdf_points(const std::vector<Observation>& obs, double bin_width) {
    if (!(bin_width > 0.0)) throw DomainError("bin width must be positive");
    std::map<long long, PooledCdfPoint> acc;
    for (const auto& o : obs) {
        CdfPoint p;
        try {
            p = estimate_cdf_point(o);
        } catch (const NotEstimable&) {
            continue;
        }
        auto& b = acc[static_cast<long long>(std::floor(p.x / bin_width))];
        b.x += p.x;
        b.F_hat += p.F_hat;
        ++b.count;
    }
    if (acc.empty()) throw NotEstimable("no observation with omega > 0 and e2 > 0");
    std::vector<PooledCdfPoint> out;
    out.reserve(acc.size());
    for (auto& [key, b] : acc) {
        b.x /= static_cast<double>(b.count);
        b.F_hat /= static_cast<double>(b.count);
        out.push_back(b);
    }
    return out;
}

std::vector<std::pair<double, double>> logit_vot_series(const std::vector<Observation>& obs,
                                                        double alpha_star) {
    std::vector<std::pair<double, double>> out;
    for (const auto& o : obs) {
        try {
            out.emplace_back(o.time, estimate_logit_vot(o, alpha_star));
        } catch (const NotEstimable&) {
        }
    }
    return out;
}

LogitVotSummary summarize_logit_vot(const std::vector<Observation>& obs, double alpha_star) {
    const auto series = logit_vot_series(obs, alpha_star);
    if (series.empty()) throw NotEstimable("no interior observation (0 < e21 < e2, omega > 0)");
    std::vector<double> v;
    v.reserve(series.size());
    double sum = 0.0;
    for (const auto& [t, est] : series) {
        v.push_back(est);
        sum += est;
    }
    std::sort(v.begin(), v.end());
    LogitVotSummary s;
    s.used = v.size();
    s.skipped = obs.size() - v.size();
    s.mean = sum / static_cast<double>(v.size());
    const std::size_t n = v.size();
    s.median = n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
    return s;
}

}  // namespace hotlane
