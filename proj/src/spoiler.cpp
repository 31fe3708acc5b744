#include "railguard/spoiler.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "railguard/io.hpp"

namespace railguard {

namespace {

double deg_to_rad(double deg) { return deg * std::numbers::pi / 180.0; }

// Relative acoustic signature of each actuation concept.
double noise_factor(SpoilerType t) {
    switch (t) {
        case SpoilerType::MacroGeometric: return 1.0;
        case SpoilerType::MicroGeometric: return 0.4;
        case SpoilerType::CounterFlow: return 0.7;
    }
    return 1.0;
}

// Lift scaling per concept. Micro elements lift like they drag (scaled-down
// panel); the ducted counter-flow vane produces no coherent lift at all.
double lift_factor(SpoilerType t) {
    switch (t) {
        case SpoilerType::MacroGeometric: return 1.0;
        case SpoilerType::MicroGeometric: return 0.3;
        case SpoilerType::CounterFlow: return 0.0;
    }
    return 1.0;
}

}  // namespace

double cd_of(const SpoilerDesign& d, double cd_max) {
    if (d.angle_deg < 0.0 || d.angle_deg > 90.0)
        throw std::domain_error("spoiler design angle outside [0, 90] degrees");
    double s = std::sin(deg_to_rad(d.angle_deg));
    switch (d.type) {
        case SpoilerType::MacroGeometric: return cd_max * s * s;
        // Distributed micro elements trip the boundary layer instead of
        // presenting bluff area; far less drag at the same angle.
        case SpoilerType::MicroGeometric: return 0.3 * cd_max * s * s;
        // The duct keeps working at shallow angles, so drag starts at half of
        // cd_max and grows linearly in sin(angle).
        case SpoilerType::CounterFlow: return cd_max * (0.5 + 0.5 * s);
    }
    return 0.0;
}

ObjectiveVector evaluate_design(const SpoilerDesign& d, const std::vector<double>& speeds,
                                double air_density, double cd_max, double cl_max) {
    if (speeds.empty())
        throw std::invalid_argument("evaluate_design needs a non-empty speed grid");
    double cd = cd_of(d, cd_max);
    double cl = lift_factor(d.type) * cl_max * std::sin(2.0 * deg_to_rad(d.angle_deg));
    double sin_a = std::sin(deg_to_rad(d.angle_deg));

    double mean_v2 = 0.0, mean_v3 = 0.0;
    for (double v : speeds) {
        mean_v2 += v * v;
        mean_v3 += v * v * v;
    }
    mean_v2 /= static_cast<double>(speeds.size());
    mean_v3 /= static_cast<double>(speeds.size());

    ObjectiveVector out;
    out.mean_brake_force = 0.5 * air_density * cd * d.area * mean_v2;
    out.noise_proxy = noise_factor(d.type) * d.area * sin_a * mean_v3 / 1e6;
    double lift = 0.5 * air_density * cl * d.area * mean_v2;
    if (d.placement == SpoilerPlacement::Roof) {
        out.down_force = lift;
    } else {
        out.lateral_force = lift;
    }
    return out;
}

bool dominates(const ObjectiveVector& a, const ObjectiveVector& b) {
    bool geq = a.mean_brake_force >= b.mean_brake_force && a.noise_proxy <= b.noise_proxy &&
               a.down_force >= b.down_force;
    bool strict = a.mean_brake_force > b.mean_brake_force || a.noise_proxy < b.noise_proxy ||
                  a.down_force > b.down_force;
    return geq && strict;
}

std::vector<std::size_t> pareto_front(const std::vector<ObjectiveVector>& objectives) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < objectives.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < objectives.size() && !dominated; ++j)
            dominated = j != i && dominates(objectives[j], objectives[i]);
        if (!dominated) out.push_back(i);
    }
    return out;
}

SweepResult sweep_grid(const std::vector<SpoilerDesign>& grid,
                       const std::vector<double>& speeds, double air_density,
                       double cd_max, double cl_max) {
    SweepResult result;
    result.designs = grid;
    result.objectives.reserve(grid.size());
    for (const auto& d : grid)
        result.objectives.push_back(evaluate_design(d, speeds, air_density, cd_max, cl_max));
    result.pareto.assign(grid.size(), false);
    for (std::size_t i : pareto_front(result.objectives)) result.pareto[i] = true;
    return result;
}

std::vector<std::pair<SpoilerDesign, ObjectiveVector>> pareto_sweep(
    const std::vector<SpoilerDesign>& grid, const std::vector<double>& speeds,
    double air_density, double cd_max, double cl_max) {
    SweepResult all = sweep_grid(grid, speeds, air_density, cd_max, cl_max);
    std::vector<std::pair<SpoilerDesign, ObjectiveVector>> out;
    for (std::size_t i = 0; i < all.designs.size(); ++i) {
        if (all.pareto[i]) out.emplace_back(all.designs[i], all.objectives[i]);
    }
    return out;
}

std::vector<SpoilerDesign> design_grid(const std::vector<SpoilerType>& types,
                                       const std::vector<double>& angles_deg,
                                       const std::vector<double>& areas,
                                       SpoilerPlacement placement) {
    std::vector<SpoilerDesign> out;
    out.reserve(types.size() * angles_deg.size() * areas.size());
    for (SpoilerType t : types) {
        for (double angle : angles_deg) {
            for (double area : areas) out.push_back({t, angle, area, placement});
        }
    }
    return out;
}

std::string sweep_csv(const SweepResult& result) {
    std::ostringstream out;
    out << "type,angle_deg,area,brake_force,noise,down_force,lateral_force,pareto\n";
    for (std::size_t i = 0; i < result.designs.size(); ++i) {
        const auto& d = result.designs[i];
        const auto& o = result.objectives[i];
        out << to_string(d.type) << ',' << fmt_double(d.angle_deg) << ','
            << fmt_double(d.area) << ',' << fmt_double(o.mean_brake_force) << ','
            << fmt_double(o.noise_proxy) << ',' << fmt_double(o.down_force) << ','
            << fmt_double(o.lateral_force) << ',' << (result.pareto[i] ? 1 : 0) << '\n';
    }
    return out.str();
}

const char* to_string(SpoilerType t) {
    switch (t) {
        case SpoilerType::MacroGeometric: return "macro";
        case SpoilerType::MicroGeometric: return "micro";
        case SpoilerType::CounterFlow: return "counter_flow";
    }
    return "?";
}

const char* to_string(SpoilerPlacement p) {
    switch (p) {
        case SpoilerPlacement::Roof: return "roof";
        case SpoilerPlacement::Side: return "side";
    }
    return "?";
}

}  // namespace railguard
