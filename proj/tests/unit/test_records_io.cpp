#include <doctest.h>

#include <sstream>

#include "hotlane/records_io.hpp"

using namespace hotlane;

TEST_CASE("header names every field") {
    const auto& cols = record_columns();
    CHECK(cols.size() == 28);
    std::ostringstream os;
    write_csv(os, {});
    CHECK(os.str() ==
          "t,delta1,delta2,rho1,rho2,v1,v2,omega,lambda,xi,a,b,u,p,e1_tilde,e2_tilde,e21_tilde,"
          "g1,g2,E1,E2,G1,G2,phase1,phase2,hot_clamp,gp_clamp,toll_clamp\n");
}

TEST_CASE("round trip and formatting") {
    SimulationRecord r;
    r.t = 1.0 / 3.0;
    r.omega = INFINITY;
    r.u = 1e3;
    r.p = 1.0;
    r.phase2 = Phase::SOC;
    r.phase1 = Phase::C;
    r.gp_clamp = true;
    r.lambda = -23.333333333333332;
    std::ostringstream os;
    write_csv(os, {r, r});
    const std::string text = os.str();
    CHECK(text.find("0.333333333,") != std::string::npos);
    CHECK(text.find(",inf,") != std::string::npos);
    CHECK(text.find(",C,SOC,0,1,0\n") != std::string::npos);

    std::istringstream is(text);
    const auto back = read_csv(is);
    REQUIRE(back.size() == 2);
    CHECK(back[0].t == doctest::Approx(1.0 / 3.0).epsilon(1e-9));
    CHECK(std::isinf(back[0].omega));
    CHECK(back[0].phase2 == Phase::SOC);
    CHECK(back[0].gp_clamp);
    CHECK_FALSE(back[0].hot_clamp);
}

TEST_CASE("malformed input") {
    std::istringstream empty("");
    CHECK_THROWS(read_csv(empty));
    std::istringstream missing("t,delta1\n0,0\n");
    CHECK_THROWS(read_csv(missing));
    std::ostringstream os;
    write_csv(os, {SimulationRecord{}});
    std::string text = os.str();
    std::istringstream short_row(text.substr(0, text.size() - 3) + "\n");
    CHECK_THROWS(read_csv(short_row));
    std::string bad = text;
    bad.replace(bad.find("SUC"), 3, "XYZ");
    std::istringstream bad_phase(bad);
    CHECK_THROWS(read_csv(bad_phase));
    CHECK_THROWS(read_csv_file("/nonexistent/file.csv"));
}
