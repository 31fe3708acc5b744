#include "railguard/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "railguard/errors.hpp"
#include "railguard/io.hpp"

namespace railguard {

FlagTimeline cruise_flag_timeline(const Scenario& sc) {
    const double v0 = sc.initial_speed;

    // Times at which anything feeding the classifier can change.
    std::set<double> breakpoints{0.0};
    if (v0 > 0.0) {
        double s = 0.0;
        for (const auto& seg : sc.track.segments()) {
            s += seg.length;
            breakpoints.insert(s / v0);
        }
    }
    for (const auto& h : sc.hazards) breakpoints.insert(h.time);

    FlagTimeline timeline;
    for (double t : breakpoints) {
        std::set<HazardKind> faults;
        for (const auto& h : sc.hazards) {
            if (h.time <= t) faults.insert(h.kind);
        }
        const double s = v0 * t;
        const double curvature =
            s < sc.track.total_length() ? sc.track.curvature_at(s) : 0.0;
        timeline.append(t, classify_situation(v0, curvature, faults, sc.train));
    }
    return timeline;
}

TrackProfile extended_track(const TrackProfile& track, double tail_length) {
    std::vector<TrackSegment> segments = track.segments();
    TrackSegment tail = segments.back();
    tail.length = tail_length;
    tail.tag_positions.clear();
    segments.push_back(tail);
    return TrackProfile(std::move(segments));
}

BrakeController make_blend_controller(const Scenario& sc, BrakingMode mode) {
    const ForceContext ctx{sc.train.mass, sc.air_density};
    const double demand = mode == BrakingMode::Coast
                              ? 0.0
                              : sc.train.mass * sc.service_decel;
    // Total commanded force of the previous step, the jerk limiter's memory.
    // The train coasts before onset, so it starts at zero.
    auto prev_total = std::make_shared<double>(0.0);

    return [&train = sc.train, ctx, mode, demand, dt = sc.timestep,
            lambda = sc.train.blend_lambda, prev_total](
               double, const TrainState& state) -> BrakeCommand {
        const double limited = jerk_limit(*prev_total, demand, dt, train.mass,
                                          train.jerk_max, mode);
        AllocationResult ar = allocate(train.brakes, state.speed, limited,
                                       train.blend_weights, mode, ctx, lambda);
        *prev_total = ar.achieved_force;
        return ar.command;
    };
}

namespace {

// The alert record for the triggering hazard: earliest class-0 record from the
// source sensor created at (or after) the hazard time.
const DeliveryRecord* find_alert_record(const std::vector<DeliveryRecord>& records,
                                        const HazardEvent& hazard) {
    const DeliveryRecord* best = nullptr;
    for (const auto& r : records) {
        if (r.priority_class != 0 || r.sensor_id != hazard.source_sensor) continue;
        if (r.created_at < hazard.time - 1e-9) continue;
        if (!best || r.created_at < best->created_at) best = &r;
    }
    return best;
}

}  // namespace

EndToEndResult run_end_to_end(const Scenario& sc, std::uint64_t seed) {
    validate(sc);

    EndToEndResult r;

    // Start-of-mission roll call; silent sensors abort the run. The report is
    // stamped at the end of the response window.
    std::vector<std::string> ids;
    std::set<std::string> responses;
    for (const auto& s : sc.network.sensors) {
        ids.push_back(s.id);
        if (!s.silent) responses.insert(s.id);
    }
    r.diagnosis = self_diagnosis(ids, responses, sc.diagnosis_timeout);
    if (!r.diagnosis.pass) {
        std::string msg = "self-diagnosis failed; silent sensors:";
        for (const auto& id : r.diagnosis.silent_sensors) msg += " " + id;
        throw ValidationError(msg);
    }

    const HazardEvent* trigger = nullptr;
    for (const auto& h : sc.hazards) {
        if (h.severity != HazardSeverity::Emergency) continue;
        if (!trigger || h.time < trigger->time) trigger = &h;
    }
    if (!trigger) {
        throw ValidationError("end-to-end run needs an emergency hazard");
    }
    r.hazard = *trigger;

    const FlagTimeline timeline = cruise_flag_timeline(sc);
    std::vector<Alert> alerts;
    for (const auto& h : sc.hazards) alerts.push_back({h.time, h.source_sensor});
    r.records = run_network(sc.network, timeline, alerts, sc.duration, seed);
    for (int cls = 0; cls <= 2; ++cls) {
        const bool any = std::any_of(
            r.records.begin(), r.records.end(),
            [&](const DeliveryRecord& rec) { return rec.priority_class == cls; });
        if (any) r.metrics.emplace(cls, latency_metrics(r.records, cls));
    }

    const DeliveryRecord* alert = find_alert_record(r.records, r.hazard);
    if (!alert || !alert->delivered_at) {
        throw std::logic_error("emergency alert was not delivered");
    }
    r.detection_latency = *alert->delivered_at - r.hazard.time;
    r.command_latency = sc.network.egress_delay + sc.extra_onset_delay;
    r.brake_onset_time = *alert->delivered_at + r.command_latency;

    const double v0 = sc.initial_speed;
    r.hazard_position = v0 * r.hazard.time;
    r.brake_onset_position = v0 * r.brake_onset_time;

    // Dead-reckoned fix over the cruise, with resets at every track tag the
    // train rolls over.
    PositionEstimate est;
    const std::vector<double> tags = sc.track.tag_chainages();
    double t = 0.0;
    double exact = 0.0;
    while (t < r.brake_onset_time - 1e-12) {
        const double dt = std::min(sc.timestep, r.brake_onset_time - t);
        const double next_exact = std::min(exact + v0 * dt, sc.track.total_length());
        std::optional<double> tag_read;
        for (double tag : tags) {
            if (exact < tag && tag <= next_exact) tag_read = tag;
        }
        est = update_position(est, v0, dt, tag_read, sc.drift_rate);
        exact = next_exact;
        t += dt;
    }
    r.onset_estimate = est;

    r.mode = select_mode(r.hazard.severity, BrakingMode::Coast);

    const TrackProfile long_track = extended_track(sc.track);
    r.stability = cornering_stability(sc.train, v0,
                                      long_track.radius_at(r.brake_onset_position),
                                      sc.train.side_down_force,
                                      sc.train.side_lateral_force);

    IntegrationOptions opts;
    opts.timestep = sc.timestep;
    opts.start_chainage = r.brake_onset_position;
    opts.start_time = r.brake_onset_time;
    opts.air_density = sc.air_density;
    r.stop = integrate_stop(sc.train, sc.train.brakes,
                            make_blend_controller(sc, r.mode), long_track, v0, opts);

    r.stopping_distance_from_hazard =
        (r.brake_onset_position - r.hazard_position) + r.stop.distance;
    const double past_end =
        r.brake_onset_position + r.stop.distance - sc.track.total_length();
    if (past_end > 1e-9) {
        r.overrun = true;
        r.overrun_distance = past_end;
    }
    return r;
}

std::string end_to_end_json(const EndToEndResult& r) {
    nlohmann::ordered_json doc;

    doc["diagnosis"] = {{"pass", r.diagnosis.pass},
                        {"silent_sensors", r.diagnosis.silent_sensors},
                        {"timestamp", r.diagnosis.timestamp}};
    doc["hazard"] = {{"time", r.hazard.time},
                     {"kind", to_string(r.hazard.kind)},
                     {"severity", to_string(r.hazard.severity)},
                     {"source_sensor", r.hazard.source_sensor},
                     {"position", r.hazard_position}};
    doc["detection_latency"] = r.detection_latency;
    doc["command_latency"] = r.command_latency;

    nlohmann::ordered_json onset;
    onset["time"] = r.brake_onset_time;
    onset["position"] = r.brake_onset_position;
    onset["estimate"] = {{"chainage", r.onset_estimate.chainage},
                         {"uncertainty", r.onset_estimate.uncertainty}};
    if (r.onset_estimate.last_tag_chainage) {
        onset["estimate"]["last_tag_chainage"] = *r.onset_estimate.last_tag_chainage;
    }
    doc["brake_onset"] = onset;

    doc["mode"] = to_string(r.mode);
    doc["stability"] = {{"lateral_accel", r.stability.lateral_accel},
                        {"effective_limit", r.stability.effective_limit},
                        {"margin", r.stability.margin},
                        {"stable", r.stability.stable},
                        {"spoiler_moment", r.stability.spoiler_moment}};
    doc["stop"] = {{"distance", r.stop.distance},
                   {"duration", r.stop.duration},
                   {"peak_jerk", r.stop.peak_jerk},
                   {"regenerated_energy", r.stop.regenerated_energy},
                   {"final_speed", r.stop.final_speed}};
    doc["stopping_distance_from_hazard"] = r.stopping_distance_from_hazard;
    doc["overrun"] = r.overrun;
    doc["overrun_distance"] = r.overrun_distance;

    nlohmann::ordered_json metrics;
    for (const auto& [cls, m] : r.metrics) {
        nlohmann::ordered_json entry;
        entry["count"] = m.count;
        entry["delivered_ratio"] = m.delivered_ratio;
        if (m.mean) entry["mean"] = *m.mean;
        if (m.p50) entry["p50"] = *m.p50;
        if (m.p99) entry["p99"] = *m.p99;
        metrics[std::to_string(cls)] = entry;
    }
    doc["network_metrics"] = metrics;

    return doc.dump(2) + "\n";
}

std::vector<CurvePoint> braking_curve(const Scenario& sc,
                                      const std::vector<double>& speeds,
                                      const std::vector<std::string>& configs,
                                      BrakingMode mode, double timestep) {
    if (speeds.empty()) throw std::invalid_argument("speed grid is empty");
    if (configs.empty()) throw std::invalid_argument("no brake configuration named");

    const TrackProfile long_track = extended_track(sc.track);
    std::vector<CurvePoint> rows;
    for (const auto& config : configs) {
        std::vector<BrakeModel> brakes;
        if (config == "all") {
            brakes = sc.train.brakes;
        } else {
            for (const auto& b : sc.train.brakes) {
                if (config == to_string(b.kind)) brakes.push_back(b);
            }
            if (brakes.empty()) {
                throw std::invalid_argument("unknown brake configuration '" + config +
                                            "' (use all, friction, regenerative, "
                                            "eddy_current or spoiler)");
            }
        }

        Scenario narrowed = sc;
        narrowed.train.brakes = brakes;
        narrowed.timestep = timestep;
        for (double v0 : speeds) {
            IntegrationOptions opts;
            opts.timestep = timestep;
            opts.air_density = sc.air_density;
            opts.record_trajectory = false;
            const StopResult stop =
                integrate_stop(narrowed.train, brakes,
                               make_blend_controller(narrowed, mode), long_track,
                               v0, opts);
            rows.push_back({config, v0, stop.distance, stop.duration});
        }
    }
    return rows;
}

std::string curve_csv(const std::vector<CurvePoint>& rows) {
    std::ostringstream out;
    out << "config,v0,distance,duration\n";
    for (const auto& row : rows) {
        out << row.config << ',' << fmt_double(row.v0) << ','
            << fmt_double(row.distance) << ',' << fmt_double(row.duration) << '\n';
    }
    return out.str();
}

}  // namespace railguard
