#pragma once

#include <memory>
#include <string>
#include <utility>

namespace hotlane {

/// Value-of-time distribution over [0, inf) in $/h.
class VotDistribution {
public:
    virtual ~VotDistribution() = default;

    virtual double cdf(double vot) const = 0;
    virtual double pdf(double vot) const = 0;
    /// z(p): the VOT with p = 1 - F(z(p)), i.e. the 100(1-p)-th percentile.
    virtual double percentile(double p) const = 0;
    virtual std::string describe() const = 0;
};

/// f(pi) = exp(-pi / mean) / mean.
class ExponentialVot final : public VotDistribution {
public:
    explicit ExponentialVot(double mean);

    double cdf(double vot) const override;
    double pdf(double vot) const override;
    double percentile(double p) const override;
    std::string describe() const override;
    double mean() const noexcept { return mean_; }

private:
    double mean_;
};

/// Uniform on [lo, hi].
class UniformVot final : public VotDistribution {
public:
    UniformVot(double lo, double hi);

    double cdf(double vot) const override;
    double pdf(double vot) const override;
    double percentile(double p) const override;
    std::string describe() const override;

private:
    double lo_;
    double hi_;
};

struct LogitParams {
    double pi_star = 50.0;    // common VOT [$/h]
    double alpha_star = 1.0;  // scale [1/($/length)]

    void validate() const;
};

/// Share of SOVs paying under deterministic UE: 1 - F(u / omega).
/// omega = kUnbounded gives 1; omega = 0 gives 0 for u > 0 and 1 - F(0) for u = 0.
double ue_share(double u, double omega, const VotDistribution& dist);

/// u = omega z(p). Throws DomainError for p outside (0, 1].
double ue_inverse_toll(double p, double omega, const VotDistribution& dist);

/// Fixed-VOT logit share 1 / (1 + exp(alpha (u - pi omega))).
double logit_share(double u, double omega, const LogitParams& params);

struct LogitToll {
    double u = 0.0;
    bool clamped = false;  // formula gave u < 0; reported as 0
};

/// u = omega pi + ln(1/p - 1) / alpha, clamped at 0 with a flag.
/// Throws DomainError for p outside (0, 1).
LogitToll logit_inverse_toll(double p, double omega, const LogitParams& params);

/// Unclamped logit inverse, for sensitivity analysis.
double logit_inverse_toll_raw(double p, double omega, const LogitParams& params);

struct InflowSplit {
    double e21_tilde;  // paying SOVs
    double e2;         // SOVs on GP lanes
};

InflowSplit split_inflow(double e2_tilde, double p);

/// A runtime lane-choice model: either UE with a VOT distribution or fixed-VOT logit.
class ChoiceModel {
public:
    static ChoiceModel ue(std::shared_ptr<const VotDistribution> dist);
    static ChoiceModel logit(LogitParams params);

    bool is_ue() const noexcept { return dist_ != nullptr; }
    const VotDistribution& distribution() const;
    const LogitParams& logit_params() const noexcept { return logit_; }

    /// Paying share for any real omega. omega < 0 (HOT slower than GP): under UE
    /// nobody pays; logit is evaluated as-is.
    double share(double u, double omega) const;

    /// Inverse form u = A omega + B returned as the pair (A, B); p in (0, 1).
    std::pair<double, double> toll_coefficients(double p) const;

    std::string describe() const;

private:
    std::shared_ptr<const VotDistribution> dist_;
    LogitParams logit_;
};

}  // namespace hotlane
