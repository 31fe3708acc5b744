#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "railguard/blending.hpp"
#include "railguard/brakes.hpp"
#include "railguard/netsim.hpp"
#include "railguard/positioning.hpp"
#include "railguard/scenario.hpp"

namespace railguard {

struct EndToEndResult {
    DiagnosisReport diagnosis;
    HazardEvent hazard;             // triggering hazard (earliest emergency)
    double hazard_position = 0.0;   // m, train chainage at hazard time
    double detection_latency = 0.0;  // s, alert creation to gateway delivery
    double command_latency = 0.0;    // s, gateway egress plus injected delay
    double brake_onset_time = 0.0;   // s
    double brake_onset_position = 0.0;  // m
    PositionEstimate onset_estimate;    // train's own dead-reckoned fix
    BrakingMode mode = BrakingMode::Coast;
    StabilityReport stability;  // cornering margin at onset
    StopResult stop;            // braking phase, measured from onset
    double stopping_distance_from_hazard = 0.0;  // m
    bool overrun = false;            // train passed the end of the track
    double overrun_distance = 0.0;   // m past track end before standstill
    std::vector<DeliveryRecord> records;
    std::map<int, LatencyMetrics> metrics;  // keyed by priority class
};

// Situation flags along a constant-speed cruise from chainage 0: curvature
// flips at segment boundaries, fault flags latch on at hazard times.
FlagTimeline cruise_flag_timeline(const Scenario& sc);

// The profile with a long continuation of its final segment appended, so stops
// that would run off the end can be integrated to standstill.
TrackProfile extended_track(const TrackProfile& track, double tail_length = 2.0e6);

// The blending unit as a per-step feedback controller: jerk-limited total
// demand (service_decel times mass in NORMAL, saturation in EMERGENCY)
// allocated across the train's brakes.
BrakeController make_blend_controller(const Scenario& sc, BrakingMode mode);

// Full hazard-to-standstill sequence: self-diagnosis roll call, constant-speed
// cruise with position tracking, alert through the sensor network, brake onset
// at delivery plus egress, blended stop. Throws ValidationError when the
// diagnosis fails or the scenario has no emergency hazard.
EndToEndResult run_end_to_end(const Scenario& sc, std::uint64_t seed);

std::string end_to_end_json(const EndToEndResult& r);

struct CurvePoint {
    std::string config;
    double v0 = 0.0;        // m/s
    double distance = 0.0;  // m
    double duration = 0.0;  // s
};

// Stopping distance over initial speeds for named brake configurations: "all",
// or one of the brake kind names for a single-system stop. Track grade is kept
// from the scenario; the track is extended so every run reaches standstill.
std::vector<CurvePoint> braking_curve(const Scenario& sc,
                                      const std::vector<double>& speeds,
                                      const std::vector<std::string>& configs,
                                      BrakingMode mode, double timestep);

// CSV with header config,v0,distance,duration.
std::string curve_csv(const std::vector<CurvePoint>& rows);

}  // namespace railguard
