#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "railguard/scenario.hpp"
#include "railguard/situation.hpp"

namespace railguard {

struct PositionEstimate {
    double chainage = 0.0;     // m
    double uncertainty = 0.0;  // m, grows with dead-reckoned distance
    std::optional<double> last_tag_chainage;
    double time = 0.0;  // s

    bool operator==(const PositionEstimate&) const = default;
};

// One dead-reckoning step of dt at the given speed. A tag read pins the
// estimate to the tag chainage and zeroes the uncertainty; without one the
// uncertainty grows by drift_rate per metre travelled. Throws
// std::runtime_error when a tag read lies behind the estimate by more than
// uncertainty + 1 m (inconsistent tag).
PositionEstimate update_position(const PositionEstimate& prev, double speed, double dt,
                                 std::optional<double> tag_read,
                                 double drift_rate = 0.01);

struct DiagnosisReport {
    bool pass = false;
    std::vector<std::string> silent_sensors;  // ids, in roll-call order
    double timestamp = 0.0;
};

// Start-of-mission roll call. Throws std::invalid_argument on an empty sensor
// list.
DiagnosisReport self_diagnosis(const std::vector<std::string>& sensor_ids,
                               const std::set<std::string>& responses,
                               double timestamp);

// Pure situation classification from current speed, track curvature and the
// active fault set. Normal appears exactly when nothing else applies.
SituationFlags classify_situation(double speed, double curvature,
                                  const std::set<HazardKind>& active_faults,
                                  const TrainConfig& train);

}  // namespace railguard
