#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "railguard/pipeline.hpp"

using namespace railguard;

namespace {

Scenario load_ref(const char* name) {
    return load_scenario_file(std::string(RAILGUARD_SCENARIO_DIR) + name);
}

}  // namespace

TEST_CASE("cruise timeline tracks curvature and speed") {
    Scenario sc = load_ref("/default.scn");
    FlagTimeline tl = cruise_flag_timeline(sc);

    // 300 km/h from t=0; the 4 km curve spans chainage 2000..3500, crossed
    // at 24..42 s. The obstacle hazard adds no on-board condition flag, so
    // only three distinct states remain.
    CHECK(tl.entries.size() == 3);
    CHECK(tl.at(0.0).has(SituationFlag::HighSpeed));
    CHECK_FALSE(tl.at(0.0).has(SituationFlag::Curved));
    CHECK(tl.at(30.0).has(SituationFlag::Curved));
    CHECK(tl.at(30.0).has(SituationFlag::HighSpeed));
    CHECK_FALSE(tl.at(50.0).has(SituationFlag::Curved));

    SUBCASE("fault hazards latch their flag") {
        Scenario fire = sc;
        fire.hazards[0].kind = HazardKind::Fire;
        FlagTimeline ftl = cruise_flag_timeline(fire);
        CHECK_FALSE(ftl.at(9.999).has(SituationFlag::Fire));
        CHECK(ftl.at(10.0).has(SituationFlag::Fire));
        CHECK(ftl.at(45.0).has(SituationFlag::Fire));  // never clears
    }
}

TEST_CASE("extended track appends a long run-off segment") {
    Scenario sc = load_ref("/default.scn");
    TrackProfile ext = extended_track(sc.track);
    REQUIRE(ext.segments().size() == sc.track.segments().size() + 1);
    CHECK(ext.total_length() == doctest::Approx(sc.track.total_length() + 2.0e6));
    const auto& tail = ext.segments().back();
    const auto& last = sc.track.segments().back();
    CHECK(tail.grade == last.grade);
    CHECK(tail.radius == last.radius);
    CHECK(tail.tag_positions.empty());
}

TEST_CASE("calibration end-to-end, frozen numbers") {
    Scenario sc = load_ref("/calibration.scn");
    EndToEndResult r = run_end_to_end(sc, *sc.seed);

    CHECK(r.diagnosis.pass);
    CHECK(r.diagnosis.timestamp == doctest::Approx(sc.diagnosis_timeout));

    CHECK(r.hazard.time == 1.0);
    CHECK(r.hazard_position == doctest::Approx(kmh_to_ms(300.0)));
    // One microsecond slot, zero link and egress delay: the alert is through
    // in a single slot.
    CHECK(r.detection_latency == doctest::Approx(1.0e-6).epsilon(1e-6));
    CHECK(r.command_latency == 0.0);
    CHECK(r.brake_onset_time == doctest::Approx(1.000001).epsilon(1e-12));
    CHECK(r.mode == BrakingMode::Emergency);

    CHECK(r.stability.stable);  // straight track
    CHECK(r.stop.outcome == StopOutcome::Stopped);
    CHECK(r.stop.distance == doctest::Approx(2815.659765366301).epsilon(1e-12));
    CHECK(r.stop.duration == doctest::Approx(67.59).epsilon(1e-9));
    // Emergency skips the jerk shaping: full force in one step.
    CHECK(r.stop.peak_jerk == doctest::Approx(123.30).epsilon(1e-6));

    CHECK(r.stopping_distance_from_hazard ==
          doctest::Approx(2815.659848699636).epsilon(1e-12));
    CHECK_FALSE(r.overrun);
    CHECK(r.overrun_distance == 0.0);

    // Dead reckoning on a tagless track: position right, uncertainty grown
    // by drift_rate per metre.
    CHECK(r.onset_estimate.chainage == doctest::Approx(r.brake_onset_position).epsilon(1e-9));
    CHECK(r.onset_estimate.uncertainty ==
          doctest::Approx(sc.drift_rate * r.brake_onset_position).epsilon(1e-6));
    CHECK_FALSE(r.onset_estimate.last_tag_chainage.has_value());

    // The watch sensor fires routinely at t=2 plus the injected alert.
    REQUIRE(r.records.size() == 2);
    CHECK(r.metrics.at(0).count == 1);
    CHECK(r.metrics.at(0).delivered_ratio == 1.0);
    CHECK(r.metrics.at(2).count == 1);
}

TEST_CASE("network delay shifts the onset but not the braking") {
    Scenario sc = load_ref("/calibration.scn");
    EndToEndResult base = run_end_to_end(sc, *sc.seed);

    sc.extra_onset_delay = 0.5;
    EndToEndResult delayed = run_end_to_end(sc, *sc.seed);

    CHECK(delayed.command_latency == doctest::Approx(0.5));
    CHECK(delayed.brake_onset_time ==
          doctest::Approx(base.brake_onset_time + 0.5).epsilon(1e-12));
    // Same entry speed, same stop; the whole delay shows up as cruise travel.
    CHECK(delayed.stop.distance == doctest::Approx(base.stop.distance).epsilon(1e-12));
    CHECK(delayed.stopping_distance_from_hazard - base.stopping_distance_from_hazard ==
          doctest::Approx(sc.initial_speed * 0.5).epsilon(1e-9));
}

TEST_CASE("end-to-end guards") {
    SUBCASE("no emergency hazard") {
        Scenario sc = load_ref("/calibration.scn");
        sc.hazards[0].severity = HazardSeverity::Urgent;
        CHECK_THROWS_WITH_AS(run_end_to_end(sc, 1),
                             doctest::Contains("emergency hazard"), ValidationError);
    }
    SUBCASE("silent sensor fails the roll call") {
        Scenario sc = load_ref("/calibration.scn");
        for (auto& s : sc.network.sensors) s.silent = true;
        CHECK_THROWS_WITH_AS(run_end_to_end(sc, 1), doctest::Contains("watch"),
                             ValidationError);
    }
}

TEST_CASE("a short track turns into an overrun, not a truncated stop") {
    Scenario sc = load_ref("/calibration.scn");
    sc.track = TrackProfile({{1000.0, kInfiniteRadius, 0.0, {}}});
    EndToEndResult r = run_end_to_end(sc, *sc.seed);

    // The braking phase still integrates to standstill on the extension.
    CHECK(r.stop.outcome == StopOutcome::Stopped);
    CHECK(r.stop.final_speed == 0.0);
    CHECK(r.stopping_distance_from_hazard ==
          doctest::Approx(2815.659848699636).epsilon(1e-12));
    CHECK(r.overrun);
    // Came to rest at onset position + stop distance, 1899 m past the end.
    CHECK(r.overrun_distance ==
          doctest::Approx(r.brake_onset_position + r.stop.distance - 1000.0)
              .epsilon(1e-9));
}

TEST_CASE("normal-mode blending respects the jerk cap") {
    Scenario sc = load_ref("/default.scn");
    // Flat track: grade steps at segment boundaries cause their own
    // acceleration jumps, outside the brake controller's authority.
    sc.track = TrackProfile({{20000.0, kInfiniteRadius, 0.0, {}}});
    BrakeController ctl = make_blend_controller(sc, BrakingMode::Normal);

    IntegrationOptions opts;
    opts.timestep = sc.timestep;
    StopResult stop = integrate_stop(sc.train, sc.train.brakes, ctl, sc.track,
                                     sc.initial_speed, opts);

    CHECK(stop.outcome == StopOutcome::Stopped);
    // Service braking: slew-limited to jerk_max, settling at service_decel.
    CHECK(stop.peak_jerk <= sc.train.jerk_max * 1.05);
    bool found = false;
    for (const auto& row : stop.trajectory) {
        if (row.t >= 5.0 && !found) {
            CHECK(row.a == doctest::Approx(-sc.service_decel).epsilon(0.02));
            found = true;
        }
    }
    CHECK(found);
}

TEST_CASE("braking curve") {
    Scenario sc = load_ref("/default.scn");
    const double v300 = kmh_to_ms(300.0);

    auto rows = braking_curve(sc, {v300}, {"friction", "all"},
                              BrakingMode::Emergency, sc.timestep);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].config == "friction");
    CHECK(rows[1].config == "all");
    CHECK(rows[0].v0 == v300);
    CHECK(rows[1].distance < rows[0].distance);  // four systems beat one
    CHECK(rows[0].duration > 0.0);

    SUBCASE("normal mode stops longer than emergency") {
        auto norm = braking_curve(sc, {v300}, {"all"}, BrakingMode::Normal, sc.timestep);
        CHECK(norm[0].distance > rows[1].distance);
    }
    SUBCASE("single-system names select one brake") {
        auto regen = braking_curve(sc, {30.0}, {"regenerative"},
                                   BrakingMode::Emergency, sc.timestep);
        REQUIRE(regen.size() == 1);
        // 300 kN on 400 t: about v^2/(2*0.75) = 600 m.
        CHECK(regen[0].distance == doctest::Approx(600.0).epsilon(0.05));
    }
    SUBCASE("unknown configuration") {
        CHECK_THROWS_WITH_AS(braking_curve(sc, {v300}, {"parachute"},
                                           BrakingMode::Emergency, sc.timestep),
                             doctest::Contains("parachute"), std::invalid_argument);
    }

    std::string csv = curve_csv(rows);
    CHECK(csv.rfind("config,v0,distance,duration\n", 0) == 0);
    std::size_t lines = 0;
    for (char c : csv) lines += c == '\n';
    CHECK(lines == rows.size() + 1);
}

TEST_CASE("end-to-end json layout") {
    Scenario sc = load_ref("/calibration.scn");
    EndToEndResult r = run_end_to_end(sc, *sc.seed);
    auto doc = nlohmann::json::parse(end_to_end_json(r));

    CHECK(doc["diagnosis"]["pass"] == true);
    CHECK(doc["hazard"]["time"] == 1.0);
    CHECK(doc["hazard"]["severity"] == "emergency");
    CHECK(doc["mode"] == "emergency");
    CHECK(doc["detection_latency"].is_number());
    CHECK(doc["brake_onset"]["position"].is_number());
    CHECK(doc["brake_onset"]["estimate"]["uncertainty"].is_number());
    CHECK(doc["stability"]["stable"] == true);
    CHECK(doc["stop"]["distance"].get<double>() ==
          doctest::Approx(2815.659765366301));
    CHECK(doc["stopping_distance_from_hazard"].get<double>() ==
          doctest::Approx(2815.659848699636));
    CHECK(doc["overrun"] == false);
    CHECK(doc["network_metrics"]["0"]["count"] == 1);
}
