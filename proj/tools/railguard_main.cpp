#include <cstdint>
#include <exception>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "railguard/errors.hpp"
#include "railguard/io.hpp"
#include "railguard/netsim.hpp"
#include "railguard/pipeline.hpp"
#include "railguard/scenario.hpp"
#include "railguard/spoiler.hpp"

namespace {

struct CommonArgs {
    std::string scenario_path;
    std::optional<std::uint64_t> seed;
    std::string out_dir;  // empty = out/<scenario stem>-<subcommand>
};

void add_common(CLI::App* cmd, CommonArgs& args) {
    cmd->add_option("--scenario", args.scenario_path, "scenario document")
        ->required()
        ->check(CLI::ExistingFile);
    cmd->add_option("--seed", args.seed,
                    "RNG seed; overrides the scenario's seed key");
    cmd->add_option("--out", args.out_dir,
                    "output directory (default out/<scenario>-<subcommand>)");
}

std::string run_dir(const CommonArgs& args, const std::string& subcommand) {
    if (!args.out_dir.empty()) return args.out_dir;
    const std::string stem = std::filesystem::path(args.scenario_path).stem().string();
    return "out/" + stem + "-" + subcommand;
}

// Deterministic runs are part of the output contract, so subcommands that
// draw random numbers refuse to fall back to a wall-clock seed.
std::uint64_t require_seed(const CommonArgs& args, const railguard::Scenario& sc) {
    if (args.seed) return *args.seed;
    if (sc.seed) return *sc.seed;
    throw CLI::ValidationError("--seed",
                               "no seed given and the scenario has no seed key");
}

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> items;
    std::string cur;
    for (char c : text) {
        if (c == ',') {
            if (!cur.empty()) items.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) items.push_back(cur);
    return items;
}

void write_out(const std::string& path, const std::string& content) {
    railguard::write_file_atomic(path, content);
    std::cout << "wrote " << path << "\n";
}

int run_braking_curve(const CommonArgs& args, const std::string& speeds_csv,
                      const std::string& configs_csv, const std::string& mode_name,
                      double timestep) {
    const railguard::Scenario sc = railguard::load_scenario_file(args.scenario_path);

    std::vector<double> speeds;
    for (const auto& item : split_list(speeds_csv)) {
        speeds.push_back(railguard::kmh_to_ms(std::stod(item)));
    }
    const auto configs = split_list(configs_csv);
    const auto mode = mode_name == "normal" ? railguard::BrakingMode::Normal
                                            : railguard::BrakingMode::Emergency;
    const double dt = timestep > 0.0 ? timestep : sc.timestep;

    const auto rows = railguard::braking_curve(sc, speeds, configs, mode, dt);
    write_out(run_dir(args, "braking-curve") + "/curve.csv",
              railguard::curve_csv(rows));
    return 0;
}

int run_netsim(const CommonArgs& args, double duration) {
    const railguard::Scenario sc = railguard::load_scenario_file(args.scenario_path);
    const std::uint64_t seed = require_seed(args, sc);

    std::vector<railguard::Alert> alerts;
    for (const auto& h : sc.hazards) alerts.push_back({h.time, h.source_sensor});
    const double window = duration > 0.0 ? duration : sc.duration;
    const auto records =
        railguard::run_network(sc.network, railguard::cruise_flag_timeline(sc),
                               alerts, window, seed);

    const std::string dir = run_dir(args, "netsim");
    write_out(dir + "/result.json", railguard::metrics_json(records));
    write_out(dir + "/net_records.csv", railguard::records_csv(records));
    return 0;
}

int run_end_to_end_cmd(const CommonArgs& args) {
    const railguard::Scenario sc = railguard::load_scenario_file(args.scenario_path);
    const std::uint64_t seed = require_seed(args, sc);

    const railguard::EndToEndResult r = railguard::run_end_to_end(sc, seed);

    const std::string dir = run_dir(args, "end-to-end");
    write_out(dir + "/result.json", railguard::end_to_end_json(r));
    write_out(dir + "/trajectory.csv", railguard::trajectory_csv(r.stop));
    write_out(dir + "/net_records.csv", railguard::records_csv(r.records));
    std::cout << "stopping distance from hazard: "
              << railguard::fmt_double(r.stopping_distance_from_hazard)
              << " m (mode " << railguard::to_string(r.mode) << ", onset "
              << railguard::fmt_double(r.brake_onset_time) << " s)\n";
    if (r.overrun) {
        std::cout << "overran the track end by "
                  << railguard::fmt_double(r.overrun_distance) << " m\n";
    }
    return 0;
}

int run_spoiler_sweep(const CommonArgs& args, const std::string& angles_spec,
                      const std::string& areas_spec, const std::string& speeds_spec,
                      const std::string& placement_name) {
    const railguard::Scenario sc = railguard::load_scenario_file(args.scenario_path);

    double cd_max = railguard::kDefaultCdMax;
    for (const auto& b : sc.train.brakes) {
        if (b.kind == railguard::BrakeKind::Spoiler) cd_max = b.cd_max;
    }

    const auto placement = placement_name == "side"
                               ? railguard::SpoilerPlacement::Side
                               : railguard::SpoilerPlacement::Roof;
    const auto grid = railguard::design_grid(
        {railguard::SpoilerType::MacroGeometric, railguard::SpoilerType::MicroGeometric,
         railguard::SpoilerType::CounterFlow},
        railguard::parse_grid(angles_spec), railguard::parse_grid(areas_spec),
        placement);
    const auto result = railguard::sweep_grid(grid, railguard::parse_grid(speeds_spec),
                                              sc.air_density, cd_max);

    std::size_t front = 0;
    for (bool p : result.pareto) front += p ? 1 : 0;
    write_out(run_dir(args, "spoiler-sweep") + "/sweep.csv",
              railguard::sweep_csv(result));
    std::cout << front << " of " << grid.size() << " designs on the Pareto front\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"rail hazard response co-simulator: in-train sensor network, "
                 "brake blending and spoiler design"};
    app.require_subcommand(1);

    CommonArgs curve_args;
    std::string speeds_csv = "50,100,150,200,250,300";
    std::string configs_csv = "friction,all";
    std::string mode_name = "emergency";
    double timestep = 0.0;
    auto* curve = app.add_subcommand(
        "braking-curve", "stopping distance over initial speed per brake set");
    add_common(curve, curve_args);
    curve->add_option("--speeds", speeds_csv, "initial speeds, km/h, comma separated");
    curve->add_option("--configs", configs_csv,
                      "brake sets: all, friction, regenerative, eddy_current, spoiler");
    curve->add_option("--mode", mode_name, "braking mode")
        ->check(CLI::IsMember({"normal", "emergency"}));
    curve->add_option("--timestep", timestep, "integrator step, s (0 = scenario value)");

    CommonArgs net_args;
    double duration = 0.0;
    auto* net = app.add_subcommand("netsim", "sensor network latency simulation");
    add_common(net, net_args);
    net->add_option("--duration", duration, "emission window, s (0 = scenario value)");

    CommonArgs e2e_args;
    auto* e2e = app.add_subcommand(
        "end-to-end", "hazard through network delivery to blended stop");
    add_common(e2e, e2e_args);

    CommonArgs sweep_args;
    std::string angles_spec = "0:90:10";
    std::string areas_spec = "8:24:3";
    std::string speeds_spec = "10:90:9";
    std::string placement_name = "roof";
    auto* sweep = app.add_subcommand(
        "spoiler-sweep", "multi-objective spoiler design grid with Pareto front");
    add_common(sweep, sweep_args);
    sweep->add_option("--angles", angles_spec, "deployment angle grid, deg, lo:hi:n");
    sweep->add_option("--areas", areas_spec, "panel area grid, m^2, lo:hi:n");
    sweep->add_option("--speeds", speeds_spec, "evaluation speed grid, m/s, lo:hi:n");
    sweep->add_option("--placement", placement_name, "panel placement")
        ->check(CLI::IsMember({"roof", "side"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (curve->parsed()) {
            return run_braking_curve(curve_args, speeds_csv, configs_csv, mode_name,
                                     timestep);
        }
        if (net->parsed()) return run_netsim(net_args, duration);
        if (e2e->parsed()) return run_end_to_end_cmd(e2e_args);
        return run_spoiler_sweep(sweep_args, angles_spec, areas_spec, speeds_spec,
                                 placement_name);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const railguard::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
