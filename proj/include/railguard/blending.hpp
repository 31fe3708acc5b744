#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "railguard/brake_model.hpp"
#include "railguard/situation.hpp"

namespace railguard {

enum class BrakingMode {
    Coast,
    Normal,
    Emergency,
};

struct BlendWeights {
    double response = 1.0 / 3.0;
    double efficiency = 1.0 / 3.0;
    double comfort = 1.0 / 3.0;

    bool operator==(const BlendWeights&) const = default;
};

// Throws ValidationError unless all weights are non-negative and sum to 1
// within 1e-9.
void validate(const BlendWeights& w);

// Mode transition on a hazard report. Emergency latches: once entered it is
// never left for the remainder of a run. Any hazard short of emergency selects
// Normal braking; no hazard keeps the current mode.
BrakingMode select_mode(std::optional<HazardSeverity> hazard, BrakingMode current);

// Mass and air density needed to evaluate force laws outside the integrator.
struct ForceContext {
    double mass = 400000.0;
    double air_density = kDefaultAirDensity;
};

// Brake indices ordered by full-activation force at the given speed, largest
// first. Ties break toward the lower kind enum value, then the lower index.
// Unavailable brakes are excluded. Throws std::invalid_argument on an empty
// brake list.
std::vector<std::size_t> effectiveness_ranking(const std::vector<BrakeModel>& brakes,
                                               double speed, const ForceContext& ctx);

struct AllocationResult {
    BrakeCommand command;        // one activation per brake, zeros for unused
    double achieved_force = 0.0;  // N, sum of allocated per-brake forces
    double shortfall = 0.0;       // N, demand left uncovered (0 when met)
    std::vector<std::size_t> ranking;  // engagement order actually used
};

// Achieved force is within kAllocationTolerance of the demand whenever the
// demand is attainable; shortfall > 0 only with every available brake
// saturated at u = 1.
inline constexpr double kAllocationTolerance = 1e-3;  // N

// Greedy demand allocation across brakes in score order. Scores combine
// normalised effectiveness with weighted response/comfort penalties and the
// efficiency credit, scaled by lambda. Emergency mode bypasses scoring and
// saturates every available brake. Throws std::invalid_argument when no brake
// is available and std::domain_error for a negative demand.
AllocationResult allocate(const std::vector<BrakeModel>& brakes, double speed,
                          double demand_force, const BlendWeights& weights,
                          BrakingMode mode, const ForceContext& ctx,
                          double lambda = 0.2);

// Clamps the change of total commanded force so |dF/dt| <= mass * jerk_max.
// Emergency mode is exempt and returns the target unchanged.
double jerk_limit(double prev_total_force, double target_total_force, double dt,
                  double mass, double jerk_max, BrakingMode mode);

const char* to_string(BrakingMode m);

}  // namespace railguard
