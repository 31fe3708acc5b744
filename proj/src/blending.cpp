#include "railguard/blending.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace railguard {

void validate(const BlendWeights& w) {
    if (w.response < 0.0 || w.efficiency < 0.0 || w.comfort < 0.0)
        throw ValidationError("blend weights non-negative");
    double sum = w.response + w.efficiency + w.comfort;
    if (std::abs(sum - 1.0) > 1e-9) throw ValidationError("blend weights sum to 1");
}

BrakingMode select_mode(std::optional<HazardSeverity> hazard, BrakingMode current) {
    if (current == BrakingMode::Emergency) return BrakingMode::Emergency;
    if (!hazard) return current;
    return *hazard == HazardSeverity::Emergency ? BrakingMode::Emergency
                                                : BrakingMode::Normal;
}

namespace {

struct Scored {
    std::size_t index;
    double capability;  // full-activation force at the current speed
    double score;
};

// Score order: normalised capability minus the lambda-scaled penalty for slow
// response and discomfort, plus the energy-recovery credit.
std::vector<Scored> score_brakes(const std::vector<BrakeModel>& brakes, double speed,
                                 const BlendWeights& w, const ForceContext& ctx,
                                 double lambda) {
    std::vector<Scored> out;
    double best = 0.0;
    for (std::size_t i = 0; i < brakes.size(); ++i) {
        if (!brakes[i].available) continue;
        double f = brake_force(brakes[i], 1.0, speed, ctx.mass, ctx.air_density);
        out.push_back({i, f, 0.0});
        best = std::max(best, f);
    }
    for (auto& s : out) {
        const BrakeModel& b = brakes[s.index];
        double norm = best > 0.0 ? s.capability / best : 0.0;
        s.score = norm - lambda * (w.response * b.response_time + w.comfort * b.comfort -
                                   w.efficiency * b.efficiency);
    }
    auto by_rank = [&](const Scored& a, const Scored& b) {
        if (a.score != b.score) return a.score > b.score;
        if (brakes[a.index].kind != brakes[b.index].kind)
            return brakes[a.index].kind < brakes[b.index].kind;
        return a.index < b.index;
    };
    std::sort(out.begin(), out.end(), by_rank);
    return out;
}

double solve_activation(const BrakeModel& b, double target, double speed,
                        const ForceContext& ctx) {
    double lo = 0.0, hi = 1.0;
    for (int it = 0; it < 100; ++it) {
        double mid = 0.5 * (lo + hi);
        double f = brake_force(b, mid, speed, ctx.mass, ctx.air_density);
        if (std::abs(f - target) <= kAllocationTolerance) return mid;
        (f < target ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace

std::vector<std::size_t> effectiveness_ranking(const std::vector<BrakeModel>& brakes,
                                               double speed, const ForceContext& ctx) {
    if (brakes.empty())
        throw std::invalid_argument("effectiveness ranking needs at least one brake");
    std::vector<std::pair<double, std::size_t>> forces;
    for (std::size_t i = 0; i < brakes.size(); ++i) {
        if (!brakes[i].available) continue;
        forces.emplace_back(brake_force(brakes[i], 1.0, speed, ctx.mass, ctx.air_density),
                            i);
    }
    std::sort(forces.begin(), forces.end(), [&](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first > b.first;
        if (brakes[a.second].kind != brakes[b.second].kind)
            return brakes[a.second].kind < brakes[b.second].kind;
        return a.second < b.second;
    });
    std::vector<std::size_t> out;
    out.reserve(forces.size());
    for (const auto& [f, i] : forces) out.push_back(i);
    return out;
}

AllocationResult allocate(const std::vector<BrakeModel>& brakes, double speed,
                          double demand_force, const BlendWeights& weights,
                          BrakingMode mode, const ForceContext& ctx, double lambda) {
    if (demand_force < 0.0) throw std::domain_error("demand force must be >= 0");
    validate(weights);
    std::size_t n_avail = 0;
    for (const auto& b : brakes) n_avail += b.available ? 1 : 0;
    if (n_avail == 0) throw std::invalid_argument("no available brakes to allocate to");

    AllocationResult result;
    result.command.assign(brakes.size(), 0.0);
    auto order = score_brakes(brakes, speed, weights, ctx, lambda);

    if (mode == BrakingMode::Emergency) {
        for (const auto& s : order) {
            result.command[s.index] = 1.0;
            result.achieved_force += s.capability;
            result.ranking.push_back(s.index);
        }
        result.shortfall = std::max(0.0, demand_force - result.achieved_force);
        return result;
    }

    double remaining = demand_force;
    for (const auto& s : order) {
        if (remaining <= kAllocationTolerance) break;
        if (s.capability <= 0.0) continue;
        const BrakeModel& b = brakes[s.index];
        if (s.capability <= remaining + kAllocationTolerance) {
            result.command[s.index] = 1.0;
            result.achieved_force += s.capability;
            remaining -= s.capability;
        } else {
            double u = solve_activation(b, remaining, speed, ctx);
            double f = brake_force(b, u, speed, ctx.mass, ctx.air_density);
            result.command[s.index] = u;
            result.achieved_force += f;
            remaining -= f;
        }
        result.ranking.push_back(s.index);
    }
    result.shortfall = remaining > kAllocationTolerance ? remaining : 0.0;
    return result;
}

double jerk_limit(double prev_total_force, double target_total_force, double dt,
                  double mass, double jerk_max, BrakingMode mode) {
    if (mode == BrakingMode::Emergency) return target_total_force;
    double max_step = mass * jerk_max * dt;
    double delta = target_total_force - prev_total_force;
    return prev_total_force + std::clamp(delta, -max_step, max_step);
}

const char* to_string(BrakingMode m) {
    switch (m) {
        case BrakingMode::Coast: return "coast";
        case BrakingMode::Normal: return "normal";
        case BrakingMode::Emergency: return "emergency";
    }
    return "?";
}

}  // namespace railguard
