#include "railguard/net_config.hpp"

namespace railguard {

const char* to_string(SensorKind k) {
    switch (k) {
        case SensorKind::Tilt: return "tilt";
        case SensorKind::PantoVideo: return "panto_video";
        case SensorKind::WheelDefect: return "wheel_defect";
        case SensorKind::Humidity: return "humidity";
        case SensorKind::Fire: return "fire";
        case SensorKind::PositionReader: return "position_reader";
    }
    return "?";
}

const char* to_string(NetworkMode m) {
    switch (m) {
        case NetworkMode::Direct: return "direct";
        case NetworkMode::Hierarchical: return "hierarchical";
    }
    return "?";
}

std::optional<SensorKind> sensor_kind_from(const std::string& name) {
    static constexpr SensorKind all[] = {
        SensorKind::Tilt,     SensorKind::PantoVideo, SensorKind::WheelDefect,
        SensorKind::Humidity, SensorKind::Fire,       SensorKind::PositionReader,
    };
    for (SensorKind k : all) {
        if (name == to_string(k)) return k;
    }
    return std::nullopt;
}

std::optional<NetworkMode> network_mode_from(const std::string& name) {
    if (name == to_string(NetworkMode::Direct)) return NetworkMode::Direct;
    if (name == to_string(NetworkMode::Hierarchical)) return NetworkMode::Hierarchical;
    return std::nullopt;
}

}  // namespace railguard
