#include <doctest.h>

#include <cmath>

#include "hotlane/error.hpp"
#include "hotlane/nfd.hpp"

using namespace hotlane;

namespace {

// the two diagrams written out independently of the library
double tri_speed(double uf, double w, double rj, double rho) {
    return rho == 0.0 ? uf : std::min(uf, w * (rj / rho - 1.0));
}
double atfd_speed(double uf, double w, double rj, double c, double rho) {
    return rho == 0.0 ? uf : std::min(uf, std::max(w * (rj - rho) / rho, c / rho));
}

}  // namespace

TEST_CASE("critical density and capacity") {
    const FdParams fd;
    CHECK(critical_density(fd) == doctest::Approx(20.0 * 140.0 / 120.0).epsilon(1e-12));
    CHECK(capacity(fd) == doctest::Approx(100.0 * 20.0 * 140.0 / 120.0).epsilon(1e-12));
    CHECK(critical_density(FdParams{60, 60, 140, 0}) == doctest::Approx(70.0));
    const FdParams atfd = FdParams::with_floor_fraction(100, 20, 140, 0.8);
    CHECK(atfd.c == doctest::Approx(0.8 * 2800.0 / 1.2));
    CHECK(floor_onset_density(atfd) == doctest::Approx(140.0 - atfd.c / 20.0));
    CHECK(floor_onset_density(fd) == 140.0);
}

TEST_CASE("speed examples") {
    const FdParams tri;
    const FdParams atfd = FdParams::with_floor_fraction(100, 20, 140, 0.8);
    CHECK(speed(tri, 10.0) == doctest::Approx(100.0));
    CHECK(speed(tri, 140.0) == 0.0);
    CHECK(speed(tri, 0.0) == 100.0);
    CHECK(speed(atfd, 140.0) == doctest::Approx(atfd.c / 140.0));
    CHECK(speed(atfd, 140.0) == doctest::Approx(13.3333).epsilon(1e-4));
    CHECK_THROWS_AS(speed(tri, -1e-12), DomainError);
    CHECK_THROWS_AS(flow(tri, -1.0), DomainError);
}

TEST_CASE("flow examples") {
    const FdParams tri;
    const FdParams atfd = FdParams::with_floor_fraction(100, 20, 140, 0.8);
    CHECK(flow(tri, 0.0) == 0.0);
    CHECK(flow(tri, critical_density(tri)) == doctest::Approx(7000.0 / 3.0).epsilon(1e-12));
    CHECK(flow(atfd, 130.0) == doctest::Approx(atfd.c));
    // above the floor onset, below it: the wave branch
    CHECK(flow(atfd, 40.0) == doctest::Approx(20.0 * 100.0));
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(FdParams({0, 20, 140, 0}).validate(), DomainError);
    CHECK_THROWS_AS(FdParams({100, -1, 140, 0}).validate(), DomainError);
    CHECK_THROWS_AS(FdParams({100, 20, 0, 0}).validate(), DomainError);
    CHECK_THROWS_AS(FdParams({100, 20, 140, -1}).validate(), DomainError);
    CHECK_THROWS_AS(FdParams({100, 20, 140, 2400}).validate(), DomainError);
    CHECK_NOTHROW(FdParams({100, 20, 140, 2800.0 / 1.2}).validate());
}

TEST_CASE("phase classification") {
    const FdParams fd;
    const double rc = critical_density(fd);
    CHECK(classify_phase(fd, 0.5 * rc) == Phase::SUC);
    CHECK(classify_phase(fd, rc) == Phase::C);
    CHECK(classify_phase(fd, rc + 5e-10) == Phase::C);
    CHECK(classify_phase(fd, 2.0 * rc) == Phase::SOC);
    CHECK(classify_phase(fd, 0.0) == Phase::SUC);
    CHECK_THROWS_AS(classify_phase(fd, -1.0), DomainError);
    CHECK(to_string(Phase::SOC) == "SOC");
}

TEST_CASE("property: diagrams agree with the direct formulas on a fine grid") {
    for (double frac : {0.0, 0.3, 0.8, 1.0}) {
        const FdParams fd = FdParams::with_floor_fraction(100, 20, 140, frac);
        const double C0 = capacity(fd);
        const double rc = critical_density(fd);
        double prev_v = INFINITY;
        double prev_q = -1.0;
        for (int i = 0; i <= 14000; ++i) {
            const double rho = 0.01 * i;
            const double v = speed(fd, rho);
            const double q = flow(fd, rho);
            const double oracle = frac == 0.0 ? tri_speed(100, 20, 140, rho)
                                              : atfd_speed(100, 20, 140, fd.c, rho);
            REQUIRE(v == doctest::Approx(oracle).epsilon(1e-12));
            REQUIRE(q == doctest::Approx(rho * v).epsilon(1e-12).scale(1.0));
            REQUIRE(v <= prev_v + 1e-12);
            REQUIRE(q <= C0 * (1.0 + 1e-12));
            if (frac == 0.0 && rho - 0.01 > rc) REQUIRE(q < prev_q);
            if (frac > 0.0) REQUIRE(v > 0.0);
            REQUIRE((classify_phase(fd, rho) == Phase::SUC) == (rho < rc - kPhaseTolerance));
            prev_v = v;
            prev_q = q;
        }
    }
}

TEST_CASE("property: ATFD with a vanishing floor tends to the triangular diagram") {
    const FdParams tri;
    for (double rho : {1.0, 23.0, 60.0, 139.9, 140.0}) {
        const FdParams small = FdParams::with_floor_fraction(100, 20, 140, 1e-9);
        CHECK(std::abs(flow(small, rho) - flow(tri, rho)) <= 1e-5);
    }
}
