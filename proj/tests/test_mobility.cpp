#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "uavsec/mobility.hpp"

using namespace uavsec;
using Catch::Matchers::WithinRel;

TEST_CASE("iot position walks the x axis at ground level", "[mobility]") {
    MobilityParams p;  // dx = 15, start (0,0,0)
    CHECK(iot_position(0, p).x == 0.0);
    CHECK(iot_position(1, p).x == 15.0);
    CHECK(iot_position(20, p).x == 300.0);
    for (const auto step : {0u, 7u, 100u}) {
        CHECK(iot_position(step, p).y == p.fixed_y);
        CHECK(iot_position(step, p).z == 0.0);
    }
}

TEST_CASE("uav position scales the device position by the speed rate", "[mobility]") {
    MobilityParams p;
    p.speed_rate = 1.0;
    for (const auto step : {0u, 3u, 42u}) {
        CHECK(uav_position(step, p).x == iot_position(step, p).x);
        CHECK(uav_position(step, p).z == p.uav_height);
    }
    p.speed_rate = 2.0;  // leading
    CHECK(uav_position(1, p).x == 30.0);
    p.speed_rate = 0.5;  // lagging
    CHECK(uav_position(20, p).x == 150.0);
}

TEST_CASE("gap law: uav-to-iot gap is (speed_rate - 1) * iot_x", "[mobility]") {
    std::mt19937 rng(17);
    std::uniform_real_distribution<double> sr_dist(0.1, 3.0);
    std::uniform_real_distribution<double> dx_dist(1.0, 50.0);
    for (int i = 0; i < 100; ++i) {
        MobilityParams p;
        p.speed_rate = sr_dist(rng);
        p.dx = dx_dist(rng);
        double prev_gap = 0.0;
        for (std::uint64_t step = 0; step <= 40; ++step) {
            const double iot_x = iot_position(step, p).x;
            const double gap = uav_position(step, p).x - iot_x;
            CHECK_THAT(gap, WithinRel((p.speed_rate - 1.0) * iot_x, 1e-9) ||
                                Catch::Matchers::WithinAbs((p.speed_rate - 1.0) * iot_x, 1e-9));
            if (p.speed_rate > 1.0) CHECK(gap >= prev_gap);
            if (p.speed_rate < 1.0) CHECK(gap <= prev_gap);
            if (p.speed_rate == 1.0) CHECK(gap == 0.0);
            prev_gap = gap;
        }
    }
}

TEST_CASE("positions are pure functions of step and params", "[mobility]") {
    MobilityParams p;
    p.speed_rate = 0.75;
    for (std::uint64_t step = 0; step <= 10; ++step) {
        CHECK(iot_position(step, p) == iot_position(step, p));
        CHECK(uav_position(step, p) == uav_position(step, p));
        CHECK(uav_position(step, p).z == p.uav_height);
    }
}
