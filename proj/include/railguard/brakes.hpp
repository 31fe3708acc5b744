#pragma once

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "railguard/brake_model.hpp"
#include "railguard/scenario.hpp"

namespace railguard {

struct TrainState {
    double position = 0.0;  // m, chainage
    double speed = 0.0;     // m/s
    double accel = 0.0;     // m/s^2, signed; negative while decelerating
    BrakeCommand command;   // last applied activations
};

struct TrajectoryRow {
    double t = 0.0;
    double s = 0.0;
    double v = 0.0;
    double a = 0.0;
    // Delivered force summed per brake kind, indexed by BrakeKind.
    std::array<double, 4> force_by_kind{};
};

enum class StopOutcome {
    Stopped,   // speed reached zero
    TrackEnd,  // ran out of track first
};

struct StopResult {
    StopOutcome outcome = StopOutcome::Stopped;
    double distance = 0.0;  // m travelled from the start chainage
    double duration = 0.0;  // s
    std::vector<TrajectoryRow> trajectory;
    double peak_jerk = 0.0;           // m/s^3, max |da/dt| between steps
    double regenerated_energy = 0.0;  // J recovered by regenerative brakes
    double final_speed = 0.0;         // m/s, nonzero only on TrackEnd
};

struct IntegrationOptions {
    double timestep = 0.01;  // s
    double start_chainage = 0.0;
    double start_time = 0.0;
    double air_density = kDefaultAirDensity;
    bool record_trajectory = true;
};

// Commanded activations for the current step; called once per step.
using BrakeController = std::function<BrakeCommand(double t, const TrainState& state)>;

// Fixed-step longitudinal stopping run (semi-implicit Euler). Each brake's
// delivered force tracks its commanded force through a first-order lag with
// time constant response_time. Track grade g adds m*g_earth*grade to the
// retarding force (uphill positive). Integration ends when the speed falls to
// zero or the track ends, whichever comes first. Throws std::invalid_argument
// when the controller returns a command of the wrong length or with an
// activation outside [0,1].
StopResult integrate_stop(const TrainConfig& train, const std::vector<BrakeModel>& brakes,
                          const BrakeController& controller, const TrackProfile& track,
                          double v0, const IntegrationOptions& opts = {});

struct StabilityReport {
    double lateral_accel = 0.0;     // m/s^2, v^2/R net of the side-spoiler credit
    double effective_limit = 0.0;   // m/s^2, comfort limit raised by down force
    double margin = 0.0;            // limit - actual
    bool stable = false;
    double spoiler_moment = 0.0;    // N*m, lateral force times the lever arm
};

// Quasi-static cornering check. An infinite radius is a straight and always
// stable. Throws std::domain_error for a non-positive finite radius.
StabilityReport cornering_stability(const TrainConfig& train, double speed, double radius,
                                    double side_spoiler_down_force,
                                    double side_spoiler_lateral_force);

// CSV with header t,s,v,a,F_friction,F_regen,F_ecb,F_spoiler.
std::string trajectory_csv(const StopResult& result);

}  // namespace railguard
