#include "railguard/brakes.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "railguard/io.hpp"

namespace railguard {

namespace {

constexpr double kStopSpeed = 1e-6;  // m/s, treated as standstill
constexpr std::size_t kMaxSteps = 20'000'000;

void check_command(const BrakeCommand& cmd, std::size_t n_brakes) {
    if (cmd.size() != n_brakes) {
        std::ostringstream os;
        os << "controller returned " << cmd.size() << " activations for " << n_brakes
           << " brakes";
        throw std::invalid_argument(os.str());
    }
    for (double u : cmd) {
        if (!(u >= 0.0 && u <= 1.0)) {
            std::ostringstream os;
            os << "brake activation " << u << " outside [0, 1]";
            throw std::invalid_argument(os.str());
        }
    }
}

}  // namespace

StopResult integrate_stop(const TrainConfig& train, const std::vector<BrakeModel>& brakes,
                          const BrakeController& controller, const TrackProfile& track,
                          double v0, const IntegrationOptions& opts) {
    if (!(opts.timestep > 0.0))
        throw std::invalid_argument("integration timestep must be positive");
    if (v0 < 0.0) throw std::invalid_argument("initial speed must be >= 0");
    double total = track.total_length();
    if (opts.start_chainage < 0.0 || opts.start_chainage > total)
        throw std::out_of_range("start chainage outside track");

    const double dt = opts.timestep;
    const double mass = train.mass;
    const std::size_t n = brakes.size();

    // First-order lag gain per brake; response_time 0 tracks instantly.
    std::vector<double> alpha(n);
    for (std::size_t i = 0; i < n; ++i) {
        double tau = brakes[i].response_time;
        alpha[i] = tau > 0.0 ? 1.0 - std::exp(-dt / tau) : 1.0;
    }

    StopResult result;
    std::vector<double> delivered(n, 0.0);
    TrainState state{opts.start_chainage, v0, 0.0, BrakeCommand(n, 0.0)};
    double t = opts.start_time;
    double prev_accel = 0.0;

    auto record = [&](const std::array<double, 4>& by_kind) {
        if (!opts.record_trajectory) return;
        result.trajectory.push_back(
            {t, state.position, state.speed, state.accel, by_kind});
    };
    record({});

    std::size_t steps = 0;
    while (true) {
        if (state.speed <= kStopSpeed) {
            result.outcome = StopOutcome::Stopped;
            state.speed = 0.0;
            break;
        }
        if (state.position >= total) {
            result.outcome = StopOutcome::TrackEnd;
            break;
        }
        if (++steps > kMaxSteps)
            throw std::runtime_error("stopping run exceeded the step limit");

        BrakeCommand cmd = controller(t, state);
        check_command(cmd, n);

        std::array<double, 4> by_kind{};
        double braking = 0.0;
        double regen = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            double target =
                brake_force(brakes[i], cmd[i], state.speed, mass, opts.air_density);
            delivered[i] += alpha[i] * (target - delivered[i]);
            braking += delivered[i];
            by_kind[static_cast<std::size_t>(brakes[i].kind)] += delivered[i];
            if (brakes[i].kind == BrakeKind::Regenerative) regen += delivered[i];
        }

        double grade = track.grade_at(state.position);
        double accel = -braking / mass - kGravity * grade;
        double v_next = state.speed + accel * dt;
        bool clamped = v_next < 0.0;
        if (clamped) v_next = 0.0;
        double s_next = std::min(state.position + v_next * dt, total);

        // On the step that reaches standstill the train moves for only part of
        // dt; crediting the whole step would book more energy than the train had.
        double dt_moving = clamped && accel < 0.0 ? state.speed / -accel : dt;
        result.regenerated_energy += regen * 0.5 * (state.speed + v_next) * dt_moving;
        result.peak_jerk = std::max(result.peak_jerk, std::abs(accel - prev_accel) / dt);
        prev_accel = accel;

        t += dt;
        state.position = s_next;
        state.speed = v_next;
        state.accel = accel;
        state.command = std::move(cmd);
        record(by_kind);
    }

    result.distance = state.position - opts.start_chainage;
    result.duration = t - opts.start_time;
    result.final_speed = state.speed;
    return result;
}

StabilityReport cornering_stability(const TrainConfig& train, double speed, double radius,
                                    double side_spoiler_down_force,
                                    double side_spoiler_lateral_force) {
    if (!std::isinf(radius) && radius <= 0.0)
        throw std::domain_error("curve radius must be positive or infinite");

    StabilityReport report;
    double centripetal = std::isinf(radius) ? 0.0 : speed * speed / radius;
    report.lateral_accel = centripetal + side_spoiler_lateral_force / train.mass;
    report.effective_limit =
        train.lateral_accel_limit *
        (1.0 + side_spoiler_down_force / (train.mass * kGravity));
    report.margin = report.effective_limit - report.lateral_accel;
    report.stable = report.margin >= 0.0;
    report.spoiler_moment = side_spoiler_lateral_force * train.lever_arm;
    return report;
}

std::string trajectory_csv(const StopResult& result) {
    std::ostringstream out;
    out << "t,s,v,a,F_friction,F_regen,F_ecb,F_spoiler\n";
    for (const auto& row : result.trajectory) {
        out << fmt_double(row.t) << ',' << fmt_double(row.s) << ',' << fmt_double(row.v)
            << ',' << fmt_double(row.a);
        for (double f : row.force_by_kind) out << ',' << fmt_double(f);
        out << '\n';
    }
    return out.str();
}

}  // namespace railguard
