#include "railguard/positioning.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace railguard {

PositionEstimate update_position(const PositionEstimate& prev, double speed, double dt,
                                 std::optional<double> tag_read, double drift_rate) {
    if (dt < 0.0) throw std::invalid_argument("dt >= 0");
    PositionEstimate next;
    next.time = prev.time + dt;
    double reckoned = prev.chainage + speed * dt;
    if (tag_read) {
        if (*tag_read < reckoned - (prev.uncertainty + 1.0)) {
            std::ostringstream os;
            os << "inconsistent tag read at " << *tag_read << " m: estimate " << reckoned
               << " m, uncertainty " << prev.uncertainty << " m";
            throw std::runtime_error(os.str());
        }
        next.chainage = *tag_read;
        next.uncertainty = 0.0;
        next.last_tag_chainage = *tag_read;
    } else {
        next.chainage = reckoned;
        next.uncertainty = prev.uncertainty + drift_rate * std::abs(speed) * dt;
        next.last_tag_chainage = prev.last_tag_chainage;
    }
    return next;
}

DiagnosisReport self_diagnosis(const std::vector<std::string>& sensor_ids,
                               const std::set<std::string>& responses,
                               double timestamp) {
    if (sensor_ids.empty())
        throw std::invalid_argument("self-diagnosis needs a non-empty sensor list");
    DiagnosisReport report;
    report.timestamp = timestamp;
    for (const auto& id : sensor_ids) {
        if (!responses.contains(id)) report.silent_sensors.push_back(id);
    }
    report.pass = report.silent_sensors.empty();
    return report;
}

SituationFlags classify_situation(double speed, double curvature,
                                  const std::set<HazardKind>& active_faults,
                                  const TrainConfig& train) {
    SituationFlags flags;
    if (curvature != 0.0) flags.set(SituationFlag::Curved);
    if (speed >= train.high_speed_threshold) flags.set(SituationFlag::HighSpeed);
    if (active_faults.contains(HazardKind::WheelFault))
        flags.set(SituationFlag::WheelFault);
    if (active_faults.contains(HazardKind::Fire)) flags.set(SituationFlag::Fire);
    if (active_faults.contains(HazardKind::PantographFault))
        flags.set(SituationFlag::PantographRisk);
    return flags;
}

}  // namespace railguard
