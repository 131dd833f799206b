#include <doctest.h>

#include <cmath>
#include <complex>
#include <memory>
#include <random>

#include "hotlane/analysis.hpp"
#include "hotlane/error.hpp"

using namespace hotlane;

namespace {

const FdParams kTri{};
const FdParams kAtfd = FdParams::with_floor_fraction(100, 20, 140, 0.8);
const double kRc = 70.0 / 3.0;

CorridorGeometry geom(double L0) { return {L0, 1.0, 1.0, 5.0}; }

// roots of s^2 - tr s + det by the textbook formula
std::array<std::complex<double>, 2> roots(double a, double b, double c, double d) {
    const double tr = a + d, det = a * d - b * c;
    const std::complex<double> sq = std::sqrt(std::complex<double>(tr * tr - 4.0 * det));
    return {(tr + sq) / 2.0, (tr - sq) / 2.0};
}

}  // namespace

TEST_CASE("A1 check") {
    const A1Check ok = check_a1(geom(10), kAtfd, kAtfd, 2000, 8600);
    CHECK(ok.holds());
    CHECK(ok.failures().empty());
    const A1Check hov = check_a1(geom(10), kAtfd, kAtfd, 5000, 8600);
    CHECK_FALSE(hov.hov_below_hot_capacity);
    CHECK(hov.failures().find("e1*D") != std::string::npos);
    const A1Check low = check_a1(geom(10), kAtfd, kAtfd, 100, 1000);
    CHECK_FALSE(low.sov_above_gp_capacity);
    CHECK_FALSE(low.total_above_joint_capacity);
}

TEST_CASE("equilibrium share") {
    const double oracle = (10.0 * kRc * 100.0 - 2000.0 * 5.0) / (5.0 * 8600.0);
    CHECK(equilibrium_share(10, kRc, 100, 5, 2000, 8600) == doctest::Approx(oracle).epsilon(1e-12));
    CHECK(oracle == doctest::Approx(0.3101).epsilon(1e-3));
    CHECK(equilibrium_share(10, kRc, 100, 5, 10 * kRc * 100 / 5, 8600) == doctest::Approx(0.0).scale(1.0));
    CHECK(equilibrium_share(10, kRc, 100, 5, 2000, 17200) ==
          doctest::Approx(0.5 * equilibrium_share(10, kRc, 100, 5, 2000, 8600)));
    CHECK(equilibrium_share(0.25, kRc, 100, 5, 50, 215) == doctest::Approx(oracle).epsilon(1e-12));
    CHECK_THROWS_AS(equilibrium_share(10, kRc, 100, 5, 5000, 8600), PreconditionError);
    CHECK_THROWS_AS(equilibrium_share(10, kRc, 100, 5, 100, 200), PreconditionError);
    CHECK_THROWS_AS(equilibrium_share(10, kRc, 100, 5, 100, 0), PreconditionError);
}

TEST_CASE("triangular growth closed form") {
    const double p0 = 0.3101, e2 = 8600, D = 5, L2 = 10;
    CHECK(triangular_growth(500, p0, e2, 20, D, 140, L2, 0.0) == doctest::Approx(500));
    const double fixed = 140.0 * L2 - D * e2 * (1 - p0) / 20.0;
    CHECK(triangular_growth(fixed, p0, e2, 20, D, 140, L2, 3.0) == doctest::Approx(fixed));
    // satisfies d delta/dt = e2 (1-p0) - w (rho_j L2 - delta)/D on the congested branch
    const double t = 0.1, h = 1e-6;
    const double d = triangular_growth(500, p0, e2, 20, D, 140, L2, t);
    const double slope = (triangular_growth(500, p0, e2, 20, D, 140, L2, t + h) -
                          triangular_growth(500, p0, e2, 20, D, 140, L2, t - h)) / (2 * h);
    CHECK(slope == doctest::Approx(e2 * (1 - p0) - 20.0 * (140.0 * L2 - d) / D).epsilon(1e-6));
}

TEST_CASE("ATFD growth rates") {
    AtfdGrowthInputs in;
    in.e2_tilde = 8600;
    in.p0 = 0.3101;
    in.c = 0.8 * 2800.0 / 1.2;
    in.gp_lanes = 1;
    in.corridor_length = 10;
    in.D = 5;
    in.delta2_t0 = 900;
    const AtfdGrowth g = atfd_growth_rates(in);
    CHECK(g.omega0 == doctest::Approx(8600 * (1 - 0.3101) / in.c - 2.0));
    CHECK(g.omega0 == doctest::Approx(1.178).epsilon(1e-3));
    CHECK(g.trip_slope == doctest::Approx(8600 * (1 - 0.3101) - in.c * 10 / 5));
    CHECK(g.omega_slope == doctest::Approx(g.omega0 / 10));
    CHECK(g.omega1 == doctest::Approx(900 / (in.c * 10) - 0.01));
    in.e2_tilde = in.c * 2.0 / (1 - in.p0);
    CHECK(atfd_growth_rates(in).omega0 == doctest::Approx(0.0).scale(1.0));
    in.c = 0;
    CHECK_THROWS_AS(atfd_growth_rates(in), DomainError);
}

TEST_CASE("equilibrium prediction picks the regime") {
    const auto lin = predict_equilibrium(geom(10), kAtfd, kAtfd, 2000, 8600);
    CHECK(lin.regime == GrowthRegime::Linear);
    CHECK(lin.a1.holds());
    CHECK(lin.growth.omega1 == doctest::Approx((140 - kAtfd.c / 20) * 10 / (kAtfd.c * 10) - 0.01));
    const auto exp = predict_equilibrium(geom(10), kTri, kTri, 2000, 8600);
    CHECK(exp.regime == GrowthRegime::Exponential);
    CHECK(exp.p0 == doctest::Approx(lin.p0));
}

TEST_CASE("linearised matrix and eigenvalues") {
    const LinearizedSystem s = linearized_matrix(1, 0, 8, 5, 10);
    CHECK(s.m[0][0] == doctest::Approx(-5));
    CHECK(s.m[0][1] == doctest::Approx(8));
    CHECK(s.m[1][0] == doctest::Approx(-0.1));
    CHECK(s.m[1][1] == 0.0);
    CHECK(linearized_matrix(1, 50, 8, 5, 10).m[0][0] == doctest::Approx(0.0).scale(1.0));
    const LinearizedSystem s2 = linearized_matrix(2, 0, 8, 5, 10);
    CHECK(s2.m[0][0] == doctest::Approx(-2.5));
    CHECK(s2.m[0][1] == doctest::Approx(4));
    CHECK_THROWS_AS(linearized_matrix(0, 0, 8, 5, 10), DomainError);
    CHECK_THROWS_AS(linearized_matrix(1, 0, 8, 5, 0), DomainError);

    const StabilityReport r = stability_check(s);
    CHECK(r.stable);
    CHECK(r.eigenvalues[0].real() == doctest::Approx(-0.1655).epsilon(1e-3));
    CHECK(r.eigenvalues[1].real() == doctest::Approx(-4.8345).epsilon(1e-4));
    CHECK(r.determinant == doctest::Approx(0.8));
    // SOC with K2 below J/L1
    CHECK_FALSE(stability_check(linearized_matrix(1, 60, 8, 5, 10)).stable);
    // complex pair
    const StabilityReport c = stability_check(linearized_matrix(1, 49, 80, 5, 10));
    CHECK(c.eigenvalues[0].imag() != 0.0);
    CHECK(c.stable);
}

TEST_CASE("property: eigenvalues agree with the quadratic formula") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> pos(0.01, 20.0), any(-50.0, 50.0);
    for (int i = 0; i < 500; ++i) {
        const double H = pos(rng), J = any(rng), K1 = pos(rng), K2 = pos(rng), L1 = pos(rng);
        const LinearizedSystem s = linearized_matrix(H, J, K1, K2, L1);
        const StabilityReport r = stability_check(s);
        auto o = roots(s.m[0][0], s.m[0][1], s.m[1][0], s.m[1][1]);
        // match as unordered pairs
        const double d1 = std::abs(r.eigenvalues[0] - o[0]) + std::abs(r.eigenvalues[1] - o[1]);
        const double d2 = std::abs(r.eigenvalues[0] - o[1]) + std::abs(r.eigenvalues[1] - o[0]);
        const double scale = 1.0 + std::abs(o[0]) + std::abs(o[1]);
        REQUIRE(std::min(d1, d2) <= 1e-9 * scale);
        REQUIRE(r.determinant > 0.0);
        REQUIRE(r.stable == (J - K2 * L1 < 0.0));
    }
}

TEST_CASE("outflow split examples") {
    const double rj = 140;
    const OutflowSplit s(100.0, kTri, 10, 1, 5);
    const double scale = 10.0 / 5.0;
    CHECK(s.g_a(kRc) == doctest::Approx(s.g_c()).epsilon(1e-12));
    CHECK(s.g_c() == doctest::Approx(scale * (2 * 20 * rj - 100 * 20)));
    CHECK(s.total(kRc) == doctest::Approx(s.g_c()));
    CHECK(s.rho1_min() == 0.0);
    CHECK(s.rho1_max() == 100.0);
    const auto iv = s.argmax_interval();
    CHECK(iv[0] == doctest::Approx(kRc));
    CHECK(iv[1] == doctest::Approx(100 - kRc));
    CHECK_FALSE(s.a1_inapplicable());
    const OutflowSplit full(2 * rj, kTri, 10, 1, 5);
    CHECK(full.max_outflow() == doctest::Approx(0.0).scale(1.0));
    CHECK(full.a1_inapplicable());
    CHECK(OutflowSplit(10.0, kTri, 10, 1, 5).a1_inapplicable());
    CHECK_THROWS_AS(OutflowSplit(10.0, kAtfd, 10, 1, 5), DomainError);
    CHECK_THROWS_AS(OutflowSplit(300.0, kTri, 10, 1, 5), DomainError);
}

TEST_CASE("property: brute-force maximiser lies in the analytic set") {
    const double rj = 140, step = 1e-3 * rj;
    for (double rt : {30.0, 40.0, 46.6, 47.0, 80.0, 140.0, 170.0, 250.0, 279.0}) {
        CAPTURE(rt);
        const OutflowSplit s(rt, kTri, 10, 1, 5);
        const double lo = s.rho1_min(), hi = s.rho1_max();
        const int n = static_cast<int>(std::floor((hi - lo) / step + 1e-9));
        double best = -1;
        for (int k = 0; k <= n; ++k) best = std::max(best, s.total(lo + k * step));
        // the grid can only undershoot, by at most one step of the steepest branch
        CHECK(best <= s.max_outflow() * (1 + 1e-12));
        CHECK(best >= s.max_outflow() - 2.0 * 120.0 * step);
        const auto iv = s.argmax_interval();
        if (iv[1] - iv[0] >= step) CHECK(best == doctest::Approx(s.max_outflow()).epsilon(1e-12));
        for (int k = 0; k <= n; ++k) {
            const double r1 = lo + k * step;
            if (s.total(r1) >= best * (1 - 1e-12)) REQUIRE(s.in_argmax(r1, step));
        }
    }
}

TEST_CASE("choice sensitivity signs per phase") {
    const FlowBalance bal{kAtfd, 10.0, 5.0, 2000.0, 8600.0};
    // flow balance written out
    CHECK(bal.share(0.0, 0.0) == doctest::Approx((kRc * 10 / 5 * 100 - 2000) / 8600));
    for (double lam : {-20.0, -5.0, 0.0, 5.0, 60.0, 110.0}) {
        const Sensitivity sx = choice_sensitivity(bal, lam, 0.0, SensitivityDirection::Xi);
        CHECK(sx.central == doctest::Approx(-1.0 / 8600.0));
    }
    CHECK(choice_sensitivity(bal, -5.0, 0.0, SensitivityDirection::Lambda).central > 0.0);
    CHECK(choice_sensitivity(bal, 10.0, 0.0, SensitivityDirection::Lambda).central < 0.0);
    // past the floor onset the derivative vanishes
    const double past = (140.0 - kAtfd.c / 20.0) - kRc + 1.0;
    CHECK(choice_sensitivity(bal, past, 0.0, SensitivityDirection::Lambda).central == doctest::Approx(0.0).scale(1.0));
    const Sensitivity at_c = choice_sensitivity(bal, 0.0, 0.0, SensitivityDirection::Lambda);
    CHECK(at_c.backward > 0.0);
    CHECK(at_c.forward < 0.0);
    CHECK_THROWS_AS(choice_sensitivity(bal, 0, 0, SensitivityDirection::Xi, 0.0), DomainError);
}

TEST_CASE("closed-loop coefficients against hand derivatives") {
    const double L1 = 0.25, D = 5, e1 = 50, e2 = 215, om = 0.5;
    const FlowBalance bal{kAtfd, L1, D, e1, e2};
    const double p = bal.share(0, 0);

    const ChoiceModel ue = ChoiceModel::ue(std::make_shared<ExponentialVot>(50.0));
    const ClosedLoopCoefficients cu = closed_loop_coefficients(ue, bal, om);
    CHECK(cu.H == doctest::Approx(50.0 / (p * e2)).epsilon(1e-5));
    CHECK(cu.J_suc == doctest::Approx(-50.0 * L1 * 100 / (p * D * e2)).epsilon(1e-5));
    CHECK(cu.J_soc == doctest::Approx(50.0 * L1 * 20 / (p * D * e2)).epsilon(1e-5));

    const ChoiceModel lg = ChoiceModel::logit({50.0, 1.0});
    const ClosedLoopCoefficients cl = closed_loop_coefficients(lg, bal, om);
    const double dB_dp = -1.0 / (p * (1 - p));
    CHECK(cl.H == doctest::Approx(dB_dp * (-1.0 / e2) / om).epsilon(1e-5));
    CHECK(cl.J_suc == doctest::Approx(dB_dp * (L1 * 100 / (D * e2)) / om).epsilon(1e-5));
    CHECK(cl.H > 0.0);
    CHECK_THROWS_AS(closed_loop_coefficients(lg, bal, 0.0), DomainError);
}
