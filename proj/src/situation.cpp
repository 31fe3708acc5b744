#include "railguard/situation.hpp"

#include <algorithm>
#include <stdexcept>

namespace railguard {

std::vector<SituationFlag> SituationFlags::active() const {
    static constexpr SituationFlag all[] = {
        SituationFlag::Normal,       SituationFlag::Curved, SituationFlag::HighSpeed,
        SituationFlag::WheelFault,   SituationFlag::Fire,   SituationFlag::PantographRisk,
    };
    std::vector<SituationFlag> out;
    for (SituationFlag f : all) {
        if (has(f)) out.push_back(f);
    }
    return out;
}

SituationFlags FlagTimeline::at(double t) const {
    SituationFlags current;
    for (const auto& [time, flags] : entries) {
        if (time > t) break;
        current = flags;
    }
    return current;
}

void FlagTimeline::append(double t, SituationFlags flags) {
    if (!entries.empty() && t < entries.back().first)
        throw std::invalid_argument("timeline entries must be appended in time order");
    SituationFlags prev = entries.empty() ? SituationFlags{} : entries.back().second;
    if (flags == prev && !entries.empty()) return;
    entries.emplace_back(t, flags);
}

const char* to_string(SituationFlag f) {
    switch (f) {
        case SituationFlag::Normal: return "normal";
        case SituationFlag::Curved: return "curved";
        case SituationFlag::HighSpeed: return "high_speed";
        case SituationFlag::WheelFault: return "wheel_fault";
        case SituationFlag::Fire: return "fire";
        case SituationFlag::PantographRisk: return "pantograph_risk";
    }
    return "?";
}

const char* to_string(HazardKind k) {
    switch (k) {
        case HazardKind::WheelFault: return "wheel_fault";
        case HazardKind::Fire: return "fire";
        case HazardKind::Obstacle: return "obstacle";
        case HazardKind::PantographFault: return "pantograph_fault";
    }
    return "?";
}

const char* to_string(HazardSeverity s) {
    switch (s) {
        case HazardSeverity::Normal: return "normal";
        case HazardSeverity::Urgent: return "urgent";
        case HazardSeverity::Emergency: return "emergency";
    }
    return "?";
}

std::optional<SituationFlag> situation_flag_from(const std::string& name) {
    static constexpr SituationFlag all[] = {
        SituationFlag::Normal,       SituationFlag::Curved, SituationFlag::HighSpeed,
        SituationFlag::WheelFault,   SituationFlag::Fire,   SituationFlag::PantographRisk,
    };
    for (SituationFlag f : all) {
        if (name == to_string(f)) return f;
    }
    return std::nullopt;
}

std::optional<HazardKind> hazard_kind_from(const std::string& name) {
    static constexpr HazardKind all[] = {
        HazardKind::WheelFault, HazardKind::Fire, HazardKind::Obstacle,
        HazardKind::PantographFault,
    };
    for (HazardKind k : all) {
        if (name == to_string(k)) return k;
    }
    return std::nullopt;
}

std::optional<HazardSeverity> hazard_severity_from(const std::string& name) {
    static constexpr HazardSeverity all[] = {
        HazardSeverity::Normal, HazardSeverity::Urgent, HazardSeverity::Emergency,
    };
    for (HazardSeverity s : all) {
        if (name == to_string(s)) return s;
    }
    return std::nullopt;
}

}  // namespace railguard
