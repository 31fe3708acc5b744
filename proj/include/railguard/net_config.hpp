#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "railguard/situation.hpp"

namespace railguard {

enum class SensorKind {
    Tilt,
    PantoVideo,
    WheelDefect,
    Humidity,
    Fire,
    PositionReader,
};

struct SensorSpec {
    std::string id;
    SensorKind kind = SensorKind::Humidity;
    int vehicle = 0;
    double base_rate = 1.0;  // Hz
    // Rate multiplier applied while the flag is active; multipliers of all
    // active flags multiply together.
    std::map<SituationFlag, double> rate_rules;
    int payload = 32;    // bytes
    bool local = false;  // terminates at the cluster head, never leaves the train
    bool silent = false;  // fails to answer self-diagnosis

    bool operator==(const SensorSpec&) const = default;
};

enum class NetworkMode {
    Direct,       // every sensor uplinks straight to the gateway
    Hierarchical,  // sensors -> per-vehicle cluster head -> gateway backbone
};

struct SuperframeSpec {
    double slot_duration = 0.001;  // s
    int priority_slots = 2;
    int contention_slots = 6;

    double period() const {
        return slot_duration * (priority_slots + contention_slots);
    }

    bool operator==(const SuperframeSpec&) const = default;
};

struct BackoffSpec {
    int max_attempts = 8;
    // Contention window for routine (class 2) traffic, in slots. Elevated
    // (class 1) traffic draws from half this window.
    int window_slots = 8;

    bool operator==(const BackoffSpec&) const = default;
};

struct NetworkConfig {
    NetworkMode mode = NetworkMode::Hierarchical;
    std::vector<SensorSpec> sensors;
    int gateways = 1;  // 2 adds a dedicated safety gateway for class-0 traffic
    SuperframeSpec superframe;
    double link_delay = 0.0002;  // s, per hop
    BackoffSpec backoff;
    double egress_delay = 0.005;  // s, gateway to the external network

    const SensorSpec* find_sensor(const std::string& id) const {
        for (const auto& s : sensors) {
            if (s.id == id) return &s;
        }
        return nullptr;
    }

    bool operator==(const NetworkConfig&) const = default;
};

const char* to_string(SensorKind k);
const char* to_string(NetworkMode m);

std::optional<SensorKind> sensor_kind_from(const std::string& name);
std::optional<NetworkMode> network_mode_from(const std::string& name);

}  // namespace railguard
