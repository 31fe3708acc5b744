#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "railguard/net_config.hpp"
#include "railguard/situation.hpp"

namespace railguard {

struct Message {
    std::uint64_t id = 0;
    std::string sensor_id;
    double created_at = 0.0;
    int priority_class = 2;  // 0 safety-critical, 1 elevated, 2 routine
    int size = 0;            // bytes
    int hops_remaining = 0;
};

struct DeliveryRecord {
    std::uint64_t message_id = 0;
    std::string sensor_id;
    int priority_class = 2;
    double created_at = 0.0;
    std::optional<double> delivered_at;  // empty = dropped
    int hop_count = 0;                   // hops completed

    bool dropped() const { return !delivered_at.has_value(); }
    bool operator==(const DeliveryRecord&) const = default;
};

// An externally injected safety-critical detection (fault, fire, obstacle)
// raised by the named sensor.
struct Alert {
    double time = 0.0;
    std::string sensor_id;
};

// Seconds between samples under the given flags: 1 / (base_rate * product of
// multipliers whose flag is active). Sensors with no matching rule keep their
// base rate.
double sampling_interval(const SensorSpec& sensor, const SituationFlags& flags);

// Alerts are class 0. Routine data is elevated to class 1 when its kind's
// situation is active: tilt under Curved, pantograph video and wheel-defect
// under HighSpeed. Everything else is class 2.
int priority_of(SensorKind kind, const SituationFlags& flags, bool is_alert);

enum class HopKind {
    ClusterHead,
    Gateway,
    SafetyGateway,
};

struct Hop {
    HopKind kind = HopKind::Gateway;
    int index = 0;  // vehicle for cluster heads, 0 otherwise

    bool operator==(const Hop&) const = default;
};

// Receiving nodes in order. Direct mode: [gateway]. Hierarchical: [cluster
// head of the sensor's vehicle, gateway]. With a second gateway configured,
// class-0 traffic terminates at the safety gateway instead. Local sensors
// terminate at their cluster head.
std::vector<Hop> route_of(const NetworkConfig& config, const SensorSpec& sensor,
                          int priority_class);

// Slot-stepped simulation of the in-train network. Sensors emit per
// sampling_interval under the flags active at emission time, within
// [0, duration); alerts are injected at their own times. Messages traverse
// their route hop by hop: class 0 is served FIFO in the dedicated priority
// slots of each superframe, classes 1 and 2 contend for the contention slots
// with seeded backoff (class 1 draws from half the window of class 2). A
// message whose contention attempts exceed max_attempts is dropped. Emission
// stops at duration but the queues drain to quiescence, so every message gets
// exactly one record. Returns records ordered by message id (creation order).
// Fully deterministic for fixed inputs. Throws std::invalid_argument for a
// non-positive duration or an alert from an unknown sensor.
std::vector<DeliveryRecord> run_network(const NetworkConfig& config,
                                        const FlagTimeline& timeline,
                                        const std::vector<Alert>& alerts,
                                        double duration, std::uint64_t seed);

struct LatencyMetrics {
    std::size_t count = 0;          // records of the class
    double delivered_ratio = 0.0;   // delivered / count
    // Absent when nothing of the class was delivered.
    std::optional<double> mean;
    std::optional<double> p50;  // nearest-rank percentiles over delivered only
    std::optional<double> p99;
};

// Throws std::invalid_argument when the class has no records at all.
LatencyMetrics latency_metrics(const std::vector<DeliveryRecord>& records,
                               int priority_class);

// CSV with header msg_id,sensor,class,created_at,delivered_at,hops,dropped.
std::string records_csv(const std::vector<DeliveryRecord>& records);

// Per-class metrics JSON (stable key order), covering each class that has
// records.
std::string metrics_json(const std::vector<DeliveryRecord>& records);

}  // namespace railguard
