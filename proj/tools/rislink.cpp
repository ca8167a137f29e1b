// SPDX-License-Identifier: Apache-2.0
//
// rislink command-line front end: scenario-file driven Monte-Carlo
// experiments with CSV output, and the RIS dimensioning solver.

#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "rislink/run_output.hpp"
#include "rislink/scenario_file.hpp"
#include "rislink/sizing.hpp"

namespace {

std::vector<double> parse_grid(const std::string& spec) {
    std::vector<double> grid;
    if (spec.find(':') != std::string::npos) {
        double lo = 0, step = 0, hi = 0;
        char c1 = 0, c2 = 0;
        std::istringstream ss(spec);
        if (!(ss >> lo >> c1 >> step >> c2 >> hi) || c1 != ':' || c2 != ':' || !(step > 0))
            throw CLI::ValidationError("--grid", "expected lo:step:hi with step > 0");
        for (double v = lo; v <= hi + 1e-9 * step; v += step) grid.push_back(v);
    } else {
        std::stringstream ss(spec);
        std::string token;
        while (std::getline(ss, token, ',')) {
            try {
                std::size_t pos = 0;
                grid.push_back(std::stod(token, &pos));
                if (pos != token.size()) throw std::invalid_argument(token);
            } catch (const std::exception&) {
                throw CLI::ValidationError("--grid", "expected a number, got '" + token + "'");
            }
        }
    }
    return grid;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"rislink - link-level Monte-Carlo simulator for RIS-assisted upper mid-band radio"};
    app.require_subcommand(1);

    // run
    auto* run = app.add_subcommand("run", "execute an experiment and write CSV results");
    std::string scenario_path;
    std::string experiment = "single";
    std::string grid_spec;
    std::string modes_csv;
    std::size_t trials = 0;
    std::optional<std::uint64_t> seed;
    std::string out_dir = "out";
    unsigned threads = 0;
    run->add_option("--scenario", scenario_path, "scenario file")->required();
    run->add_option("--experiment", experiment,
                    "single | power | qos | elements | placement | cdf");
    run->add_option("--grid", grid_spec, "sweep grid, lo:step:hi or v1,v2,...");
    run->add_option("--trials", trials, "Monte-Carlo trials (overrides the scenario)");
    run->add_option("--seed", seed, "master seed (overrides the scenario)");
    run->add_option("--out", out_dir, "output directory");
    run->add_option("--modes", modes_csv, "mode filter, comma-separated");
    run->add_option("--threads", threads, "worker threads (0 = hardware)");

    // size
    auto* size = app.add_subcommand("size", "RIS element-count dimensioning");
    std::string size_scenario;
    double fc = 7.8, d3d = 0.0, kappa = 42.5;
    bool kappa_set = false;
    long n_low = 1, n_high = 8192;
    std::size_t size_trials = 10000;
    std::uint64_t size_seed = 1;
    unsigned size_threads = 0;
    size->add_option("--fc", fc, "carrier in GHz (closed-form rule)");
    size->add_option("--d3d", d3d, "3D transmitter-receiver distance in m (closed-form rule)");
    size->add_option("--kappa", kappa, "correction coefficient, calibrated interval (40, 45)")
        ->each([&](const std::string&) { kappa_set = true; });
    size->add_option("--scenario", size_scenario, "scenario file for the simulated crossover");
    size->add_option("--n-low", n_low, "search bracket lower bound");
    size->add_option("--n-high", n_high, "search bracket upper bound");
    size->add_option("--trials", size_trials, "trials per bracket evaluation");
    size->add_option("--seed", size_seed, "master seed");
    size->add_option("--threads", size_threads, "worker threads (0 = hardware)");

    // validate
    auto* validate = app.add_subcommand("validate", "parse a scenario file and echo it");
    std::string validate_path;
    validate->add_option("--scenario", validate_path, "scenario file")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed()) {
            rislink::RunManifest manifest;
            manifest.scenario_ref = scenario_path;
            manifest.scenario = rislink::parse_scenario_file(scenario_path);
            manifest.experiment = rislink::parse_experiment(experiment);
            if (!grid_spec.empty()) {
                if (manifest.experiment == rislink::Experiment::Single ||
                    manifest.experiment == rislink::Experiment::Cdf)
                    throw std::invalid_argument("--grid is only meaningful for sweep experiments");
                rislink::SweepSpec sweep;
                switch (manifest.experiment) {
                    case rislink::Experiment::PowerSweep:
                        sweep.axis = rislink::SweepAxis::TxPowerDbm;
                        break;
                    case rislink::Experiment::QosSweep:
                        sweep.axis = rislink::SweepAxis::QosR;
                        break;
                    case rislink::Experiment::ElementsSweep:
                        sweep.axis = rislink::SweepAxis::NElements;
                        break;
                    default:
                        sweep.axis = rislink::SweepAxis::RisY;
                        break;
                }
                sweep.grid = parse_grid(grid_spec);
                manifest.sweep = sweep;
            }
            manifest.trials = trials;
            manifest.seed = seed;
            manifest.out_dir = out_dir;
            manifest.engine.threads = threads;
            if (!modes_csv.empty()) {
                manifest.scenario.modes.clear();
                std::stringstream ss(modes_csv);
                std::string token;
                while (std::getline(ss, token, ','))
                    manifest.scenario.modes.push_back(rislink::parse_mode(token));
            }
            return rislink::execute(manifest);
        }

        if (size->parsed()) {
            if (d3d > 0.0) {
                rislink::SizingQuery q{fc, d3d, kappa};
                rislink::validate_sizing_query(q, kappa_set);
                std::cout << "formula_elements: " << rislink::required_elements_formula(q)
                          << "\n";
            }
            if (!size_scenario.empty()) {
                const rislink::ScenarioConfig cfg = rislink::parse_scenario_file(size_scenario);
                rislink::EngineOptions opts{size_threads};
                const double target =
                    rislink::sizing_target(cfg, size_trials, size_seed, opts);
                std::cout << "benchmark_target: " << target << "\n";
                const auto n = rislink::required_elements_simulated(cfg, target, n_low, n_high,
                                                                    size_trials, size_seed, opts);
                if (n)
                    std::cout << "simulated_elements: " << *n << "\n";
                else
                    std::cout << "simulated_elements: not reachable within [" << n_low << ", "
                              << n_high << "]\n";
            }
            if (!(d3d > 0.0) && size_scenario.empty())
                throw std::invalid_argument("size: pass --d3d for the closed-form rule and/or "
                                            "--scenario for the simulated crossover");
            return 0;
        }

        if (validate->parsed()) {
            const rislink::ScenarioConfig cfg = rislink::parse_scenario_file(validate_path);
            std::cout << "ok: " << validate_path << " (use case " << use_case_name(cfg.use_case)
                      << ", carrier " << cfg.carrier_ghz << " GHz, trials " << cfg.trials
                      << ", seed " << cfg.seed << ")\n";
            return 0;
        }
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 1;
    }
    return 0;
}
