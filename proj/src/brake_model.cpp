#include "railguard/brake_model.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace railguard {

double friction_force(const BrakeModel& b, double u, double speed, double mass) {
    (void)speed;
    if (!b.available) return 0.0;
    double adhesion_cap = b.adhesion_mu * mass * kGravity;
    return std::min(u * b.max_force, adhesion_cap);
}

double regen_force(const BrakeModel& b, double u, double speed) {
    if (!b.available) return 0.0;
    double power_cap = b.max_power / std::max(speed, kRegenSpeedFloor);
    return u * std::min(b.max_force, power_cap);
}

double ecb_force(const BrakeModel& b, double u, double speed) {
    if (!b.available) return 0.0;
    double x = speed / b.critical_speed;
    return u * b.peak_force * 2.0 * x / (1.0 + x * x);
}

double spoiler_drag_force(const BrakeModel& b, double angle_deg, double speed,
                          double air_density) {
    if (angle_deg < 0.0 || angle_deg > b.angle_max_deg)
        throw std::domain_error("spoiler angle outside [0, angle_max_deg]");
    if (!b.available) return 0.0;
    double s = std::sin(angle_deg * std::numbers::pi / 180.0);
    double cd = b.cd_max * s * s;
    return 0.5 * air_density * cd * b.area * speed * speed;
}

double brake_force(const BrakeModel& b, double u, double speed, double mass,
                   double air_density) {
    switch (b.kind) {
        case BrakeKind::Friction: return friction_force(b, u, speed, mass);
        case BrakeKind::Regenerative: return regen_force(b, u, speed);
        case BrakeKind::EddyCurrent: return ecb_force(b, u, speed);
        case BrakeKind::Spoiler:
            return spoiler_drag_force(b, u * b.angle_max_deg, speed, air_density);
    }
    return 0.0;
}

std::vector<BrakeModel> default_brakes(double train_mass) {
    BrakeModel friction;
    friction.kind = BrakeKind::Friction;
    friction.max_force = train_mass * kCalibrationDecel;
    friction.adhesion_mu = 0.15;
    friction.response_time = 0.7;
    friction.efficiency = 0.0;
    friction.comfort = 0.6;

    BrakeModel regen;
    regen.kind = BrakeKind::Regenerative;
    regen.max_force = 300000.0;
    regen.max_power = 8.0e6;
    regen.response_time = 0.3;
    regen.efficiency = 1.0;
    regen.comfort = 0.1;

    BrakeModel ecb;
    ecb.kind = BrakeKind::EddyCurrent;
    ecb.peak_force = 200000.0;
    ecb.critical_speed = 15.0;
    ecb.response_time = 0.15;
    ecb.efficiency = 0.0;
    ecb.comfort = 0.2;

    BrakeModel spoiler;
    spoiler.kind = BrakeKind::Spoiler;
    spoiler.area = 24.0;  // 3 m^2 of panel per vehicle on an 8-vehicle set
    spoiler.cd_max = 1.2;
    spoiler.angle_max_deg = 90.0;
    spoiler.response_time = 1.0;
    spoiler.efficiency = 0.0;
    spoiler.comfort = 0.8;

    return {friction, regen, ecb, spoiler};
}

void validate_brake(const BrakeModel& b) {
    auto require = [](bool ok, const char* what) {
        if (!ok) throw ValidationError(what);
    };
    switch (b.kind) {
        case BrakeKind::Friction:
            require(b.max_force > 0.0, "friction brake: max_force > 0");
            require(b.adhesion_mu > 0.0, "friction brake: adhesion_mu > 0");
            break;
        case BrakeKind::Regenerative:
            require(b.max_force > 0.0, "regenerative brake: max_force > 0");
            require(b.max_power > 0.0, "regenerative brake: max_power > 0");
            break;
        case BrakeKind::EddyCurrent:
            require(b.peak_force > 0.0, "eddy-current brake: peak_force > 0");
            require(b.critical_speed > 0.0, "eddy-current brake: critical_speed > 0");
            break;
        case BrakeKind::Spoiler:
            require(b.area > 0.0, "spoiler: area > 0");
            require(b.cd_max > 0.0, "spoiler: cd_max > 0");
            require(b.angle_max_deg > 0.0 && b.angle_max_deg <= 90.0,
                    "spoiler: angle_max_deg in (0, 90]");
            break;
    }
    auto in01 = [](double x) { return x >= 0.0 && x <= 1.0; };
    if (b.response_time < 0.0) throw ValidationError("brake: response_time >= 0");
    if (!in01(b.efficiency)) throw ValidationError("brake: efficiency in [0,1]");
    if (!in01(b.comfort)) throw ValidationError("brake: comfort in [0,1]");
}

const char* to_string(BrakeKind k) {
    switch (k) {
        case BrakeKind::Friction: return "friction";
        case BrakeKind::Regenerative: return "regenerative";
        case BrakeKind::EddyCurrent: return "eddy_current";
        case BrakeKind::Spoiler: return "spoiler";
    }
    return "?";
}

}  // namespace railguard
