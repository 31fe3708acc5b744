#pragma once

#include <string>
#include <vector>

#include "railguard/errors.hpp"

namespace railguard {

inline constexpr double kGravity = 9.81;             // m/s^2
inline constexpr double kDefaultAirDensity = 1.225;  // kg/m^3, sea level
// Friction-only service deceleration the default brake is sized for. A train
// of mass m gets a default friction brake of m * kCalibrationDecel newtons.
inline constexpr double kCalibrationDecel = 1.2330;  // m/s^2
// Guards the power/speed division in the regenerative force law.
inline constexpr double kRegenSpeedFloor = 0.1;  // m/s

enum class BrakeKind {
    Friction,
    Regenerative,
    EddyCurrent,
    Spoiler,
};

// One brake system of the train. Only the fields for its kind are meaningful;
// the rest stay at their defaults.
struct BrakeModel {
    BrakeKind kind = BrakeKind::Friction;

    // Friction: force cap, clipped by adhesion mu*m*g. Regenerative reuses
    // max_force as the traction-motor torque cap.
    double max_force = 0.0;  // N
    double adhesion_mu = 0.15;

    // Regenerative
    double max_power = 0.0;  // W

    // Eddy current: unimodal force/speed curve peaking at critical_speed.
    double peak_force = 0.0;      // N
    double critical_speed = 15.0;  // m/s

    // Spoiler: command u = 1 deploys to angle_max_deg.
    double area = 0.0;  // m^2
    double cd_max = 1.2;
    double angle_max_deg = 90.0;

    // All kinds
    double response_time = 0.0;  // s, first-order actuator lag (0 = instant)
    double efficiency = 0.0;     // [0,1], energy-recovery credit in blending
    double comfort = 0.0;        // [0,1], discomfort cost in blending
    bool available = true;       // disabled brakes deliver no force

    bool operator==(const BrakeModel&) const = default;
};

// Per-brake activation levels, one entry per brake, each in [0,1].
using BrakeCommand = std::vector<double>;

// Force laws. All take the activation u in [0,1] and the train speed in m/s
// and return a retarding force in newtons (>= 0). An unavailable brake
// delivers zero force.
double friction_force(const BrakeModel& b, double u, double speed, double mass);
double regen_force(const BrakeModel& b, double u, double speed);
double ecb_force(const BrakeModel& b, double u, double speed);
// Drag force of a spoiler panel at the given deployment angle. Throws
// std::domain_error when the angle is outside [0, angle_max_deg].
double spoiler_drag_force(const BrakeModel& b, double angle_deg, double speed,
                          double air_density);

// Dispatches on kind. For spoilers the command maps linearly onto the angle
// range: angle = u * angle_max_deg.
double brake_force(const BrakeModel& b, double u, double speed, double mass,
                   double air_density);

// The standard four-brake fit-out for a train of the given mass.
std::vector<BrakeModel> default_brakes(double train_mass);

// Throws ValidationError when a parameter invariant does not hold.
void validate_brake(const BrakeModel& b);

const char* to_string(BrakeKind k);

}  // namespace railguard
