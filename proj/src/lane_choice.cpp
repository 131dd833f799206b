#include "hotlane/lane_choice.hpp"

#include <cmath>
#include <sstream>

#include "hotlane/bathtub.hpp"
#include "hotlane/error.hpp"

namespace hotlane {

ExponentialVot::ExponentialVot(double mean) : mean_(mean) {
    if (!(mean > 0.0)) throw DomainError("exponential VOT mean must be positive");
}

double ExponentialVot::cdf(double vot) const {
    if (vot <= 0.0) return 0.0;
    return -std::expm1(-vot / mean_);
}

double ExponentialVot::pdf(double vot) const {
    if (vot < 0.0) return 0.0;
    return std::exp(-vot / mean_) / mean_;
}

double ExponentialVot::percentile(double p) const {
    if (!(p > 0.0) || p > 1.0) throw DomainError("percentile needs p in (0, 1]");
    return -mean_ * std::log(p);
}

std::string ExponentialVot::describe() const {
    std::ostringstream os;
    os << "exponential(mean=" << mean_ << ")";
    return os.str();
}

UniformVot::UniformVot(double lo, double hi) : lo_(lo), hi_(hi) {
    if (!(lo >= 0.0) || !(hi > lo)) throw DomainError("uniform VOT needs 0 <= lo < hi");
}

double UniformVot::cdf(double vot) const {
    if (vot <= lo_) return 0.0;
    if (vot >= hi_) return 1.0;
    return (vot - lo_) / (hi_ - lo_);
}

double UniformVot::pdf(double vot) const {
    return (vot >= lo_ && vot <= hi_) ? 1.0 / (hi_ - lo_) : 0.0;
}

double UniformVot::percentile(double p) const {
    if (!(p > 0.0) || p > 1.0) throw DomainError("percentile needs p in (0, 1]");
    return hi_ - p * (hi_ - lo_);
}

std::string UniformVot::describe() const {
    std::ostringstream os;
    os << "uniform(" << lo_ << ", " << hi_ << ")";
    return os.str();
}

void LogitParams::validate() const {
    if (!(alpha_star > 0.0)) throw DomainError("logit scale alpha* must be positive");
    if (!(pi_star >= 0.0)) throw DomainError("logit VOT pi* must be non-negative");
}

double ue_share(double u, double omega, const VotDistribution& dist) {
    if (u < 0.0 || std::isnan(u)) throw DomainError("toll must be non-negative");
    if (omega < 0.0 || std::isnan(omega)) throw DomainError("travel-time gap must be non-negative");
    if (is_unbounded(omega)) return 1.0;
    if (omega == 0.0) return u > 0.0 ? 0.0 : 1.0 - dist.cdf(0.0);
    return 1.0 - dist.cdf(u / omega);
}

double ue_inverse_toll(double p, double omega, const VotDistribution& dist) {
    if (p == 0.0) throw DomainError("zero paying share needs an unbounded toll");
    if (!(p > 0.0) || p > 1.0) throw DomainError("share must lie in (0, 1]");
    if (omega < 0.0 || std::isnan(omega)) throw DomainError("travel-time gap must be non-negative");
    return omega * dist.percentile(p);
}

double logit_share(double u, double omega, const LogitParams& params) {
    params.validate();
    if (u < 0.0 || std::isnan(u)) throw DomainError("toll must be non-negative");
    if (is_unbounded(omega)) return 1.0;
    const double x = params.alpha_star * (u - params.pi_star * omega);
    // numerically stable logistic 1 / (1 + e^x)
    if (x >= 0.0) {
        const double e = std::exp(-x);
        return e / (1.0 + e);
    }
    return 1.0 / (1.0 + std::exp(x));
}

double logit_inverse_toll_raw(double p, double omega, const LogitParams& params) {
    params.validate();
    if (!(p > 0.0) || !(p < 1.0)) throw DomainError("logit inverse needs p in (0, 1)");
    return omega * params.pi_star + std::log(1.0 / p - 1.0) / params.alpha_star;
}

LogitToll logit_inverse_toll(double p, double omega, const LogitParams& params) {
    const double raw = logit_inverse_toll_raw(p, omega, params);
    if (raw < 0.0) return {0.0, true};
    return {raw, false};
}

InflowSplit split_inflow(double e2_tilde, double p) {
    if (e2_tilde < 0.0) throw DomainError("SOV rate must be non-negative");
    if (!(p >= 0.0) || p > 1.0) throw DomainError("share must lie in [0, 1]");
    const double paying = p * e2_tilde;
    return {paying, e2_tilde - paying};
}

ChoiceModel ChoiceModel::ue(std::shared_ptr<const VotDistribution> dist) {
    if (!dist) throw DomainError("UE choice needs a VOT distribution");
    ChoiceModel m;
    m.dist_ = std::move(dist);
    return m;
}

ChoiceModel ChoiceModel::logit(LogitParams params) {
    params.validate();
    ChoiceModel m;
    m.logit_ = params;
    return m;
}

const VotDistribution& ChoiceModel::distribution() const {
    if (!dist_) throw DomainError("logit model has no VOT distribution");
    return *dist_;
}

double ChoiceModel::share(double u, double omega) const {
    if (dist_) {
        if (omega < 0.0) return 0.0;
        return ue_share(u, omega, *dist_);
    }
    return logit_share(u, omega, logit_);
}

std::pair<double, double> ChoiceModel::toll_coefficients(double p) const {
    if (dist_) return {dist_->percentile(p), 0.0};
    return {logit_.pi_star, logit_inverse_toll_raw(p, 0.0, logit_)};
}

std::string ChoiceModel::describe() const {
    if (dist_) return "ue/" + dist_->describe();
    std::ostringstream os;
    os << "logit(pi*=" << logit_.pi_star << ", alpha*=" << logit_.alpha_star << ")";
    return os.str();
}

}  // namespace hotlane
