#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace railguard {

enum class SpoilerType {
    MacroGeometric,  // full deflection panel
    MicroGeometric,  // distributed surface elements, low drag and low noise
    CounterFlow,     // ducted counter-flow vane, drag even at low angles
};

enum class SpoilerPlacement {
    Roof,  // lift acts as down force
    Side,  // lift acts laterally
};

struct SpoilerDesign {
    SpoilerType type = SpoilerType::MacroGeometric;
    double angle_deg = 0.0;  // deployment angle in [0, 90]
    double area = 0.0;       // m^2
    SpoilerPlacement placement = SpoilerPlacement::Roof;

    bool operator==(const SpoilerDesign&) const = default;
};

inline constexpr double kDefaultCdMax = 1.2;
inline constexpr double kDefaultClMax = 0.8;

// Drag coefficient at the design's angle. Throws std::domain_error outside
// [0, 90] degrees.
double cd_of(const SpoilerDesign& d, double cd_max = kDefaultCdMax);

struct ObjectiveVector {
    double mean_brake_force = 0.0;  // N, averaged over the speed grid
    double noise_proxy = 0.0;       // scales with area, angle and v^3
    double down_force = 0.0;        // N (roof placement)
    double lateral_force = 0.0;     // N (side placement)

    bool operator==(const ObjectiveVector&) const = default;
};

// Objectives over a non-empty speed grid (m/s). Forces are means over the
// grid. Throws std::invalid_argument on an empty grid.
ObjectiveVector evaluate_design(const SpoilerDesign& d, const std::vector<double>& speeds,
                                double air_density, double cd_max = kDefaultCdMax,
                                double cl_max = kDefaultClMax);

// a dominates b when a is at least as good on every compared objective
// (brake force up, noise down, down force up) and strictly better on one.
// Lateral force is a constraint input, not a compared objective.
bool dominates(const ObjectiveVector& a, const ObjectiveVector& b);

// Indices of the non-dominated designs, in input order. Equal vectors do not
// dominate each other, so exact ties all survive.
std::vector<std::size_t> pareto_front(const std::vector<ObjectiveVector>& objectives);

struct SweepResult {
    std::vector<SpoilerDesign> designs;
    std::vector<ObjectiveVector> objectives;
    std::vector<bool> pareto;
};

// Evaluates every design and marks the Pareto front. Grid order is preserved.
SweepResult sweep_grid(const std::vector<SpoilerDesign>& grid,
                       const std::vector<double>& speeds, double air_density,
                       double cd_max = kDefaultCdMax, double cl_max = kDefaultClMax);

// The non-dominated subset with its objectives, in grid order.
std::vector<std::pair<SpoilerDesign, ObjectiveVector>> pareto_sweep(
    const std::vector<SpoilerDesign>& grid, const std::vector<double>& speeds,
    double air_density, double cd_max = kDefaultCdMax, double cl_max = kDefaultClMax);

// Cross product in type-major, then angle, then area order.
std::vector<SpoilerDesign> design_grid(const std::vector<SpoilerType>& types,
                                       const std::vector<double>& angles_deg,
                                       const std::vector<double>& areas,
                                       SpoilerPlacement placement = SpoilerPlacement::Roof);

// CSV with header type,angle_deg,area,brake_force,noise,down_force,
// lateral_force,pareto covering the whole grid.
std::string sweep_csv(const SweepResult& result);

const char* to_string(SpoilerType t);
const char* to_string(SpoilerPlacement p);

}  // namespace railguard
