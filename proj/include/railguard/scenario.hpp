#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "railguard/blending.hpp"
#include "railguard/brake_model.hpp"
#include "railguard/errors.hpp"
#include "railguard/net_config.hpp"
#include "railguard/situation.hpp"

namespace railguard {

inline constexpr double kInfiniteRadius = std::numeric_limits<double>::infinity();

double kmh_to_ms(double kmh);

struct TrackSegment {
    double length = 0.0;              // m
    double radius = kInfiniteRadius;  // m; infinity = straight
    double grade = 0.0;               // signed rise/run, uphill positive
    // Balise tag offsets within the segment, strictly increasing, each in
    // [0, length).
    std::vector<double> tag_positions;

    bool operator==(const TrackSegment&) const = default;
};

// Immutable piecewise track description with cumulative chainage lookup.
class TrackProfile {
public:
    TrackProfile() = default;
    // Validates every segment; throws ValidationError naming the failed
    // invariant.
    explicit TrackProfile(std::vector<TrackSegment> segments);

    const std::vector<TrackSegment>& segments() const { return segments_; }
    double total_length() const { return starts_.empty() ? 0.0 : starts_.back(); }

    // Maps chainage s in [0, total_length] to (segment index, offset within
    // segment). A segment boundary belongs to the later segment; s equal to
    // the total length maps to the last segment at its full length. Throws
    // std::out_of_range outside [0, total_length].
    std::pair<std::size_t, double> segment_at(double s) const;

    double curvature_at(double s) const;  // 1/radius; 0 on straight track
    double radius_at(double s) const;
    double grade_at(double s) const;

    // Absolute chainages of all tags, ascending.
    std::vector<double> tag_chainages() const;

    bool operator==(const TrackProfile& o) const { return segments_ == o.segments_; }

private:
    std::vector<TrackSegment> segments_;
    std::vector<double> starts_;  // cumulative start chainages, size n+1
};

struct TrainConfig {
    double mass = 400000.0;       // kg
    double frontal_area = 12.0;   // m^2
    int n_vehicles = 8;
    double high_speed_threshold = 200.0 / 3.6;  // m/s
    std::vector<BrakeModel> brakes;             // see default_brakes()
    double lateral_accel_limit = 1.0;  // m/s^2, uncompensated comfort limit
    double lever_arm = 1.8;  // m, rail contact to aerodynamic centre of pressure
    double jerk_max = 0.75;  // m/s^3, service braking jerk cap
    BlendWeights blend_weights;
    double blend_lambda = 0.2;
    // Side-mounted spoiler forces credited during cornering. The lateral force
    // is signed; positive pushes outward.
    double side_down_force = 0.0;     // N
    double side_lateral_force = 0.0;  // N

    bool operator==(const TrainConfig&) const = default;
};

struct HazardEvent {
    double time = 0.0;  // s
    HazardKind kind = HazardKind::Obstacle;
    HazardSeverity severity = HazardSeverity::Emergency;
    std::string source_sensor;  // id of the reporting sensor

    bool operator==(const HazardEvent&) const = default;
};

struct Scenario {
    TrackProfile track;
    TrainConfig train;
    double initial_speed = 0.0;  // m/s
    std::vector<HazardEvent> hazards;  // sorted by time
    NetworkConfig network;
    std::optional<std::uint64_t> seed;
    double timestep = 0.01;  // s, in (0, 0.1]
    double duration = 20.0;  // s, sensor emission window for network runs
    double air_density = kDefaultAirDensity;  // kg/m^3
    double extra_onset_delay = 0.0;  // s, injected command-path latency
    double diagnosis_timeout = 2.0;  // s
    double drift_rate = 0.01;  // odometry uncertainty per metre travelled
    double service_decel = 0.8;  // m/s^2 demand in Normal braking

    bool operator==(const Scenario&) const = default;
};

// Parses a scenario document. Throws ParseError with the offending line for
// syntax problems and ValidationError for violated invariants.
Scenario load_scenario(const std::string& text);
Scenario load_scenario_file(const std::string& path);

// Canonical serialization: SI units, fixed section and key order, shortest
// round-trip number format. load_scenario(serialize(s)) == s.
std::string serialize(const Scenario& s);

// Cross-field checks (sensor vehicles vs n_vehicles, hazard sources present,
// hazard ordering, ...). load_scenario calls this; construction by hand can
// call it directly.
void validate(const Scenario& s);

// The sensor fit-out a scenario gets when it does not list any: per vehicle a
// tilt, wheel-defect, fire and humidity sensor, plus a pantograph camera and a
// position reader on vehicle 0.
std::vector<SensorSpec> default_sensor_suite(int n_vehicles);

}  // namespace railguard
