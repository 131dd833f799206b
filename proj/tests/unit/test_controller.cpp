#include <doctest.h>

#include "hotlane/bathtub.hpp"
#include "hotlane/controller.hpp"
#include "hotlane/error.hpp"

using namespace hotlane;

TEST_CASE("toll law") {
    ControllerState c;
    CHECK(toll(c, 0.3).u == 0.0);
    c.a = 50.0;
    c.b = 0.2;
    CHECK(toll(c, 0.01).u == doctest::Approx(0.7));
    CHECK_FALSE(toll(c, 0.01).clamped);
    c.a = 10.0;
    c.b = -1.0;
    CHECK(toll(c, 0.01).u == 0.0);
    CHECK(toll(c, 0.01).clamped);
    CHECK(toll(c, kUnbounded).u == 1e3);
    CHECK(toll(c, kUnbounded, {250.0}).u == 250.0);
}

TEST_CASE("integral update") {
    ControllerState c;
    c.a = 3.0;
    c.b = -2.0;
    const ControllerState same = update(c, 0.0, 0.0, 0.5);
    CHECK(same.a == 3.0);
    CHECK(same.b == -2.0);
    const ControllerState n = update(c, 2.0, -100.0, 1.0);
    CHECK(n.a - c.a == doctest::Approx(16.0 + 500.0));
    CHECK(n.b - c.b == doctest::Approx(16.0 + 600.0));
    const ControllerState up = update(c, 0.5, 0.0, 0.01);
    CHECK(up.a > c.a);
    CHECK(up.b > c.b);
    // large negative excursions are integrated, not clamped
    const ControllerState down = update(c, -1000.0, 0.0, 1.0);
    CHECK(down.a == doctest::Approx(3.0 - 8000.0));
}

TEST_CASE("gain validation") {
    CHECK_NOTHROW(ControllerGains{}.validate());
    CHECK_THROWS_AS(ControllerGains({8, 0, 8, 6}).validate(), DomainError);
    CHECK_THROWS_AS(ControllerGains({8, 5, -8, 6}).validate(), DomainError);
}

TEST_CASE("property: sign logic of the updates") {
    const ControllerState c;
    for (double lam : {-3.0, -0.1, 0.0, 0.2, 4.0}) {
        for (double xi : {-50.0, 0.0, 10.0}) {
            const ControllerState base = update(c, lam, xi, 0.01);
            const ControllerState more_lam = update(c, lam + 0.5, xi, 0.01);
            const ControllerState more_xi = update(c, lam, xi + 5.0, 0.01);
            REQUIRE(more_lam.a > base.a);
            REQUIRE(more_lam.b > base.b);
            REQUIRE(more_xi.a < base.a);
            REQUIRE(more_xi.b < base.b);
        }
    }
    // with xi = 0 stationary integrators force lambda = 0
    for (double lam : {-1.0, 1e-6, 2.0}) {
        const ControllerState n = update(c, lam, 0.0, 1.0);
        REQUIRE((n.a != c.a || n.b != c.b));
    }
}
