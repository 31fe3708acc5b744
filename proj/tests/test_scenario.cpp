#include <cmath>
#include <stdexcept>
#include <string>

#include "doctest.h"
#include "railguard/scenario.hpp"

using namespace railguard;

namespace {

// Smallest document the parser accepts: one segment is all that is required.
const char* kMinimalDoc = "[track]\nsegment = length=1000\n";

Scenario minimal() { return load_scenario(kMinimalDoc); }

}  // namespace

TEST_CASE("kmh conversion") {
    CHECK(kmh_to_ms(300.0) == doctest::Approx(83.3333333333).epsilon(1e-9));
    CHECK(kmh_to_ms(3.6) == doctest::Approx(1.0));
    CHECK(kmh_to_ms(0.0) == 0.0);
}

TEST_CASE("track profile chainage lookup") {
    TrackProfile track({
        {2000.0, kInfiniteRadius, 0.0, {500.0, 1500.0}},
        {1500.0, 4000.0, -0.005, {250.0}},
        {2500.0, kInfiniteRadius, 0.002, {0.0, 1000.0}},
    });

    CHECK(track.total_length() == 6000.0);

    SUBCASE("boundaries belong to the later segment") {
        auto [i0, off0] = track.segment_at(0.0);
        CHECK(i0 == 0);
        CHECK(off0 == 0.0);
        auto [i1, off1] = track.segment_at(2000.0);
        CHECK(i1 == 1);
        CHECK(off1 == 0.0);
        // The very end maps into the last segment, not past it.
        auto [i2, off2] = track.segment_at(6000.0);
        CHECK(i2 == 2);
        CHECK(off2 == 2500.0);
    }

    SUBCASE("curvature, radius and grade follow the segment") {
        CHECK(track.curvature_at(100.0) == 0.0);
        CHECK(track.curvature_at(2500.0) == doctest::Approx(1.0 / 4000.0));
        CHECK(track.radius_at(2500.0) == 4000.0);
        CHECK(track.grade_at(2500.0) == -0.005);
        CHECK(track.grade_at(4000.0) == 0.002);
    }

    SUBCASE("tags are absolute and ascending") {
        auto tags = track.tag_chainages();
        REQUIRE(tags.size() == 5);
        CHECK(tags[0] == 500.0);
        CHECK(tags[1] == 1500.0);
        CHECK(tags[2] == 2250.0);
        CHECK(tags[3] == 3500.0);
        CHECK(tags[4] == 4500.0);
    }

    SUBCASE("out of range chainage throws") {
        CHECK_THROWS_AS(track.segment_at(-0.001), std::out_of_range);
        CHECK_THROWS_AS(track.segment_at(6000.001), std::out_of_range);
    }
}

TEST_CASE("track profile invariants") {
    CHECK_THROWS_AS(TrackProfile({{0.0, kInfiniteRadius, 0.0, {}}}), ValidationError);
    CHECK_THROWS_AS(TrackProfile({{1000.0, 50.0, 0.0, {}}}), ValidationError);
    CHECK_THROWS_AS(TrackProfile({{1000.0, kInfiniteRadius, 0.2, {}}}), ValidationError);
    // Tag at the segment's full length is out of its half-open range.
    CHECK_THROWS_AS(TrackProfile({{1000.0, kInfiniteRadius, 0.0, {1000.0}}}),
                    ValidationError);
    CHECK_THROWS_AS(TrackProfile({{1000.0, kInfiniteRadius, 0.0, {300.0, 300.0}}}),
                    ValidationError);
}

TEST_CASE("minimal document gets full defaults") {
    Scenario sc = minimal();
    CHECK(sc.timestep == 0.01);
    CHECK(sc.duration == 20.0);
    CHECK(sc.initial_speed == 0.0);
    CHECK_FALSE(sc.seed.has_value());
    CHECK(sc.train.mass == 400000.0);
    CHECK(sc.train.n_vehicles == 8);
    // No [train] brake lines means the standard four-system fit-out.
    CHECK(sc.train.brakes == default_brakes(sc.train.mass));
    // No sensors means the default suite for the vehicle count.
    CHECK(sc.network.sensors == default_sensor_suite(8));
    CHECK(sc.network.mode == NetworkMode::Hierarchical);
}

TEST_CASE("default sensor suite layout") {
    auto suite = default_sensor_suite(8);
    // Four per vehicle plus the pantograph camera and position reader on
    // vehicle 0.
    CHECK(suite.size() == 4 * 8 + 2);
    int panto = 0, pos = 0;
    for (const auto& s : suite) {
        CHECK(!s.id.empty());
        CHECK(s.vehicle >= 0);
        CHECK(s.vehicle < 8);
        if (s.kind == SensorKind::PantoVideo) ++panto;
        if (s.kind == SensorKind::PositionReader) ++pos;
    }
    CHECK(panto == 1);
    CHECK(pos == 1);
}

TEST_CASE("serialize round-trips the reference scenarios") {
    for (const char* name : {"/default.scn", "/calibration.scn", "/standard_load.scn"}) {
        CAPTURE(name);
        Scenario sc = load_scenario_file(std::string(RAILGUARD_SCENARIO_DIR) + name);
        Scenario back = load_scenario(serialize(sc));
        CHECK(back == sc);
        // Canonical form is a fixed point.
        CHECK(serialize(back) == serialize(sc));
    }
}

TEST_CASE("speed parses in kmh and m/s") {
    Scenario sc = load_scenario(
        "[sim]\ninitial_speed = 300 kmh\n[track]\nsegment = length=100\n");
    CHECK(sc.initial_speed == doctest::Approx(kmh_to_ms(300.0)));
    Scenario sc2 = load_scenario(
        "[sim]\ninitial_speed = 80\n[track]\nsegment = length=100\n");
    CHECK(sc2.initial_speed == 80.0);
}

TEST_CASE("infinite radius spells inf") {
    Scenario sc = load_scenario("[track]\nsegment = length=100 radius=inf\n");
    CHECK(std::isinf(sc.track.segments()[0].radius));
    CHECK(serialize(sc).find("radius=inf") != std::string::npos);
}

TEST_CASE("parse errors carry the source line") {
    // Line 3 holds the broken entry.
    const std::string doc = "[track]\nsegment = length=1000\nsegment = length=oops\n";
    try {
        load_scenario(doc);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
        CHECK(std::string(e.what()).find("line 3") != std::string::npos);
        CHECK(std::string(e.what()).find("oops") != std::string::npos);
    }

    CHECK_THROWS_AS(load_scenario("[nope]\n"), ParseError);
    CHECK_THROWS_AS(load_scenario("stray = 1\n"), ParseError);
    CHECK_THROWS_AS(load_scenario("[track]\nsegment = radius\n"), ParseError);
    CHECK_THROWS_AS(load_scenario("[track]\nsegment = length=10 color=red\n"),
                    ParseError);
    CHECK_THROWS_AS(
        load_scenario("[track]\nsegment = length=10\n[train]\nbrake = max_force=1\n"),
        ParseError);  // brake entry without kind=
    CHECK_THROWS_AS(load_scenario_file("/nonexistent/path.scn"), ParseError);
}

TEST_CASE("validation failures are named") {
    SUBCASE("sensor on a vehicle the train does not have") {
        const std::string doc =
            "[track]\nsegment = length=100\n"
            "[train]\nn_vehicles = 2\n"
            "[network]\nsensor = id=x kind=fire vehicle=5\n";
        CHECK_THROWS_WITH_AS(load_scenario(doc),
                             doctest::Contains("vehicle < n_vehicles"), ValidationError);
    }
    SUBCASE("hazard from a sensor that is not configured") {
        const std::string doc =
            "[track]\nsegment = length=100\n"
            "[hazards]\nhazard = time=1 kind=fire severity=urgent sensor=ghost\n";
        CHECK_THROWS_WITH_AS(load_scenario(doc), doctest::Contains("ghost"),
                             ValidationError);
    }
    SUBCASE("hazards must be in time order") {
        const std::string doc =
            "[track]\nsegment = length=100\n"
            "[hazards]\n"
            "hazard = time=5 kind=fire severity=urgent sensor=fire-0\n"
            "hazard = time=1 kind=fire severity=urgent sensor=fire-0\n";
        CHECK_THROWS_WITH_AS(load_scenario(doc), doctest::Contains("out of time order"),
                             ValidationError);
    }
    SUBCASE("duplicate sensor ids") {
        const std::string doc =
            "[track]\nsegment = length=100\n"
            "[network]\n"
            "sensor = id=a kind=fire vehicle=0\n"
            "sensor = id=a kind=tilt vehicle=0\n";
        CHECK_THROWS_WITH_AS(load_scenario(doc), doctest::Contains("duplicate"),
                             ValidationError);
    }
    SUBCASE("timestep bounds") {
        Scenario sc = minimal();
        sc.timestep = 0.5;
        CHECK_THROWS_AS(validate(sc), ValidationError);
        sc.timestep = 0.0;
        CHECK_THROWS_AS(validate(sc), ValidationError);
    }
}

TEST_CASE("sensor rate rules parse as flag:multiplier pairs") {
    Scenario sc = load_scenario(
        "[track]\nsegment = length=100\n"
        "[network]\n"
        "sensor = id=w kind=wheel_defect vehicle=0 base_rate=2 "
        "rate=high_speed:4,curved:2\n");
    const SensorSpec* s = sc.network.find_sensor("w");
    REQUIRE(s != nullptr);
    CHECK(s->rate_rules.at(SituationFlag::HighSpeed) == 4.0);
    CHECK(s->rate_rules.at(SituationFlag::Curved) == 2.0);
    CHECK_THROWS_AS(load_scenario("[track]\nsegment = length=100\n[network]\n"
                                  "sensor = id=w kind=tilt rate=fast:2\n"),
                    ParseError);
}
