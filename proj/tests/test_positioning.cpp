#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "railguard/positioning.hpp"

using namespace railguard;

TEST_CASE("dead reckoning accumulates drift per metre") {
    PositionEstimate est;  // chainage 0, no uncertainty
    // 10 steps of 1 s at 20 m/s with drift 0.01 m per metre.
    for (int i = 0; i < 10; ++i) est = update_position(est, 20.0, 1.0, std::nullopt, 0.01);
    CHECK(est.chainage == doctest::Approx(200.0));
    CHECK(est.uncertainty == doctest::Approx(2.0));
    CHECK(est.time == doctest::Approx(10.0));
    CHECK_FALSE(est.last_tag_chainage.has_value());
}

TEST_CASE("a tag read pins the estimate") {
    PositionEstimate est;
    est = update_position(est, 50.0, 2.0, std::nullopt, 0.01);
    CHECK(est.uncertainty == doctest::Approx(1.0));

    // Reader passes a balise at 104 m while dead reckoning says 105: within
    // tolerance, so the estimate snaps to the tag.
    est = update_position(est, 50.0, 0.1, 104.0, 0.01);
    CHECK(est.chainage == 104.0);
    CHECK(est.uncertainty == 0.0);
    REQUIRE(est.last_tag_chainage.has_value());
    CHECK(*est.last_tag_chainage == 104.0);

    // Drift resumes from zero after the fix.
    est = update_position(est, 50.0, 1.0, std::nullopt, 0.01);
    CHECK(est.uncertainty == doctest::Approx(0.5));
    CHECK(*est.last_tag_chainage == 104.0);
}

TEST_CASE("a tag far behind the estimate is rejected") {
    PositionEstimate est;
    est.chainage = 500.0;
    est.uncertainty = 3.0;
    // 500 - 490 = 10 m behind, past uncertainty + 1 m.
    CHECK_THROWS_AS(update_position(est, 10.0, 0.1, 490.0, 0.01), std::runtime_error);
    // Just inside the tolerance is accepted.
    PositionEstimate ok = update_position(est, 10.0, 0.1, 497.5, 0.01);
    CHECK(ok.chainage == 497.5);
}

TEST_CASE("self diagnosis roll call") {
    std::vector<std::string> ids{"tilt-0", "wheel-0", "fire-0"};

    SUBCASE("all answer") {
        auto report = self_diagnosis(ids, {"fire-0", "tilt-0", "wheel-0"}, 2.0);
        CHECK(report.pass);
        CHECK(report.silent_sensors.empty());
        CHECK(report.timestamp == 2.0);
    }
    SUBCASE("missing sensors are listed in roll-call order") {
        auto report = self_diagnosis(ids, {"wheel-0"}, 2.0);
        CHECK_FALSE(report.pass);
        REQUIRE(report.silent_sensors.size() == 2);
        CHECK(report.silent_sensors[0] == "tilt-0");
        CHECK(report.silent_sensors[1] == "fire-0");
    }
    SUBCASE("responses from unknown ids do not help") {
        auto report = self_diagnosis(ids, {"tilt-0", "wheel-0", "fire-0", "extra"}, 2.0);
        CHECK(report.pass);
    }
    SUBCASE("empty roll is an error") {
        CHECK_THROWS_AS(self_diagnosis({}, {}, 0.0), std::invalid_argument);
    }
}

TEST_CASE("situation classification") {
    TrainConfig train;  // high_speed_threshold 200 km/h

    SUBCASE("slow and straight is normal") {
        auto flags = classify_situation(30.0, 0.0, {}, train);
        CHECK(flags.normal());
        CHECK(flags.has(SituationFlag::Normal));
    }
    SUBCASE("threshold speed counts as high speed") {
        auto flags = classify_situation(train.high_speed_threshold, 0.0, {}, train);
        CHECK(flags.has(SituationFlag::HighSpeed));
        CHECK_FALSE(flags.normal());
        auto below =
            classify_situation(train.high_speed_threshold - 0.01, 0.0, {}, train);
        CHECK(below.normal());
    }
    SUBCASE("curvature sets the curved flag") {
        auto flags = classify_situation(30.0, 1.0 / 4000.0, {}, train);
        CHECK(flags.has(SituationFlag::Curved));
        CHECK_FALSE(flags.has(SituationFlag::HighSpeed));
    }
    SUBCASE("faults map onto their flags") {
        auto flags = classify_situation(
            30.0, 0.0, {HazardKind::WheelFault, HazardKind::Fire}, train);
        CHECK(flags.has(SituationFlag::WheelFault));
        CHECK(flags.has(SituationFlag::Fire));
        CHECK_FALSE(flags.has(SituationFlag::PantographRisk));

        auto panto = classify_situation(30.0, 0.0, {HazardKind::PantographFault}, train);
        CHECK(panto.has(SituationFlag::PantographRisk));
        // An obstacle is outside the train, not an on-board condition.
        auto obst = classify_situation(30.0, 0.0, {HazardKind::Obstacle}, train);
        CHECK(obst.normal());
    }
}

TEST_CASE("flag timeline lookup") {
    FlagTimeline tl;
    CHECK(tl.at(0.0).normal());  // empty history reads normal

    tl.append(0.0, SituationFlags::of({SituationFlag::HighSpeed}));
    tl.append(5.0, SituationFlags::of({SituationFlag::HighSpeed, SituationFlag::Curved}));
    // A no-change append is dropped.
    tl.append(7.0, SituationFlags::of({SituationFlag::Curved, SituationFlag::HighSpeed}));
    CHECK(tl.entries.size() == 2);

    CHECK(tl.at(-1.0).normal());  // before the first entry
    CHECK(tl.at(0.0).has(SituationFlag::HighSpeed));
    CHECK_FALSE(tl.at(4.999).has(SituationFlag::Curved));
    CHECK(tl.at(5.0).has(SituationFlag::Curved));
    CHECK(tl.at(100.0).has(SituationFlag::Curved));
}
