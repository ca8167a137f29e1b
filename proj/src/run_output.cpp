// SPDX-License-Identifier: Apache-2.0

#include "rislink/run_output.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <json.hpp>

#include "rislink/engine.hpp"

namespace rislink {

namespace {

using ordered_json = nlohmann::ordered_json;

std::vector<Mode> emitted_modes(const ScenarioConfig& cfg) {
    std::vector<Mode> out;
    for (Mode m : {Mode::StaticOnly, Mode::RisOnly, Mode::RisPlusStatic})
        for (Mode sel : cfg.modes)
            if (sel == m) {
                out.push_back(m);
                break;
            }
    return out;
}

void write_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << content;
    if (!out) throw std::runtime_error("write failed for " + path.string());
}

std::string axis_column(SweepAxis axis) {
    switch (axis) {
        case SweepAxis::TxPowerDbm: return "p_tx_dbm";
        case SweepAxis::QosR: return "r_bps_hz";
        case SweepAxis::NElements: return "n_elements";
        case SweepAxis::RisY: return "ris_y_m";
    }
    return "axis";
}

SweepAxis experiment_axis(Experiment e) {
    switch (e) {
        case Experiment::PowerSweep: return SweepAxis::TxPowerDbm;
        case Experiment::QosSweep: return SweepAxis::QosR;
        case Experiment::ElementsSweep: return SweepAxis::NElements;
        case Experiment::PlacementSweep: return SweepAxis::RisY;
        default: throw std::logic_error("experiment has no sweep axis");
    }
}

std::string csv_name(Experiment e) {
    switch (e) {
        case Experiment::PowerSweep: return "power_sweep.csv";
        case Experiment::QosSweep: return "qos_sweep.csv";
        case Experiment::ElementsSweep: return "elements_sweep.csv";
        case Experiment::PlacementSweep: return "placement_sweep.csv";
        case Experiment::Cdf: return "cdf.csv";
        case Experiment::Single: break;
    }
    return "";
}

ordered_json node_json(const Node3D& n) { return ordered_json::array({n.x, n.y, n.z}); }

ordered_json scenario_json(const ScenarioConfig& cfg) {
    ordered_json j;
    j["use_case"] = use_case_name(cfg.use_case);
    j["carrier_ghz"] = cfg.carrier_ghz;
    j["bandwidth_mhz"] = cfg.radio.bandwidth_hz / 1e6;
    j["tx_power_dbm"] = cfg.radio.p_tx_dbm;
    j["tx_gain_dbi"] = cfg.radio.g_t_dbi;
    j["rx_gain_dbi"] = cfg.radio.g_r_dbi;
    j["noise_psd_dbm_hz"] = cfg.radio.noise_psd_dbm_hz;
    j["tx_xyz"] = node_json(cfg.tx);
    if (cfg.rx_fixed) j["rx_xyz"] = node_json(*cfg.rx_fixed);
    if (cfg.rx_region) {
        j["user_region"] =
            cfg.rx_region->kind == UserRegion::Kind::CellDisc ? "cell-disc" : "roi-disc";
        j["region_center_xy"] =
            ordered_json::array({cfg.rx_region->center.x, cfg.rx_region->center.y});
        j["region_radius_m"] = cfg.rx_region->radius_m;
        j["user_height_m"] = cfg.rx_region->user_height_m;
    }
    if (cfg.ris) {
        j["ris_xyz"] = node_json(cfg.ris->center);
        j["n_elements"] = cfg.ris->n_elements;
        j["element_gain_dbi"] = cfg.ris->element_gain_dbi;
    }
    j["los_mode_static"] = los_mode_name(cfg.los_static);
    j["los_mode_tx_ris"] = los_mode_name(cfg.los_tx_ris);
    j["los_mode_ris_rx"] = los_mode_name(cfg.los_ris_rx);
    j["k_factor_db"] = cfg.channel.k_factor_db;
    j["shadow_sigma_los_db"] = cfg.channel.shadow_sigma_los_db;
    j["shadow_sigma_nlos_db"] = cfg.channel.shadow_sigma_nlos_db;
    j["cell_radius_m"] = cfg.cell_radius_m;
    j["min_user_tx_distance_m"] = cfg.min_user_tx_distance_m;
    if (cfg.qos_r_bps_hz) j["qos_r_bps_hz"] = *cfg.qos_r_bps_hz;
    ordered_json modes = ordered_json::array();
    for (Mode m : cfg.modes) modes.push_back(mode_name(m));
    j["modes"] = modes;
    return j;
}

}  // namespace

const char* experiment_name(Experiment e) {
    switch (e) {
        case Experiment::Single: return "single";
        case Experiment::PowerSweep: return "power_sweep";
        case Experiment::QosSweep: return "qos_sweep";
        case Experiment::ElementsSweep: return "elements_sweep";
        case Experiment::PlacementSweep: return "placement_sweep";
        case Experiment::Cdf: return "cdf";
    }
    return "unknown";
}

Experiment parse_experiment(const std::string& name) {
    for (Experiment e : {Experiment::Single, Experiment::PowerSweep, Experiment::QosSweep,
                         Experiment::ElementsSweep, Experiment::PlacementSweep, Experiment::Cdf})
        if (name == experiment_name(e)) return e;
    if (name == "power") return Experiment::PowerSweep;
    if (name == "qos") return Experiment::QosSweep;
    if (name == "elements") return Experiment::ElementsSweep;
    if (name == "placement") return Experiment::PlacementSweep;
    throw std::invalid_argument("unknown experiment: " + name);
}

std::string format_csv_value(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

std::uint64_t fnv1a64(const void* data, std::size_t size) {
    const auto* bytes = static_cast<const unsigned char*>(data);
    std::uint64_t hash = 0xcbf29ce484222325ULL;
    for (std::size_t i = 0; i < size; ++i) {
        hash ^= bytes[i];
        hash *= 0x100000001b3ULL;
    }
    return hash;
}

std::uint64_t fnv1a64_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    const std::string s = buf.str();
    return fnv1a64(s.data(), s.size());
}

int execute(const RunManifest& manifest) {
    try {
        const ScenarioConfig& cfg = manifest.scenario;
        cfg.validate();
        const std::size_t trials = manifest.trials != 0 ? manifest.trials : cfg.trials;
        const std::uint64_t seed = manifest.seed.value_or(cfg.seed);
        if (trials == 0) throw std::domain_error("run: trials must be > 0");
        const std::vector<Mode> modes = emitted_modes(cfg);
        std::filesystem::create_directories(manifest.out_dir);

        const bool coverage_metric = cfg.qos_r_bps_hz.has_value();
        const std::string metric_prefix =
            (manifest.experiment == Experiment::QosSweep || coverage_metric) ? "cov_" : "se_";

        std::vector<std::pair<std::string, std::string>> files;  // name -> content
        std::ostringstream summary;
        summary << "rislink run summary\n";
        summary << "experiment: " << experiment_name(manifest.experiment) << "\n";
        summary << "scenario: " << manifest.scenario_ref << " (" << use_case_name(cfg.use_case)
                << ")\n";
        summary << "carrier_ghz: " << format_csv_value(cfg.carrier_ghz) << "\n";
        summary << "trials: " << trials << "\n";
        summary << "seed: " << seed << "\n";

        if (manifest.experiment == Experiment::Single || manifest.experiment == Experiment::Cdf) {
            const MetricSamples samples = run_trials(cfg, trials, seed, manifest.engine);
            for (Mode m : modes) {
                summary << "mean_se_" << mode_name(m) << ": "
                        << format_csv_value(mean(samples.of(m))) << "\n";
                if (coverage_metric)
                    summary << "cov_" << mode_name(m) << ": "
                            << format_csv_value(
                                   coverage_probability(samples.of(m), *cfg.qos_r_bps_hz))
                            << "\n";
            }
            if (manifest.experiment == Experiment::Cdf) {
                std::ostringstream csv;
                csv << "mode,se_bps_hz,cum_prob\n";
                for (Mode m : modes)
                    for (const CdfPoint& p : empirical_cdf(samples.of(m)))
                        csv << mode_name(m) << "," << format_csv_value(p.value) << ","
                            << format_csv_value(p.cum_prob) << "\n";
                files.emplace_back(csv_name(Experiment::Cdf), csv.str());
            }
        } else {
            SweepSpec sweep = manifest.sweep.value_or(
                SweepSpec{experiment_axis(manifest.experiment), {}});
            if (sweep.axis != experiment_axis(manifest.experiment))
                throw std::invalid_argument("run: sweep axis does not match the experiment");
            if (sweep.grid.empty()) sweep.grid = default_grid(sweep.axis);
            const std::vector<SweepRow> rows =
                run_sweep(cfg, sweep, trials, seed, manifest.engine);

            std::ostringstream csv;
            csv << axis_column(sweep.axis);
            for (Mode m : modes) csv << "," << metric_prefix << mode_name(m);
            if (sweep.axis == SweepAxis::RisY) csv << ",e2e_los_prob";
            csv << "\n";
            for (const SweepRow& row : rows) {
                csv << format_csv_value(row.axis_value);
                for (Mode m : modes)
                    csv << "," << format_csv_value(row.metric[static_cast<int>(m)]);
                if (sweep.axis == SweepAxis::RisY)
                    csv << "," << format_csv_value(row.e2e_los.value_or(0.0));
                csv << "\n";
            }
            files.emplace_back(csv_name(manifest.experiment), csv.str());

            summary << "axis: " << sweep_axis_name(sweep.axis) << "\n";
            summary << "grid: " << format_csv_value(sweep.grid.front()) << " .. "
                    << format_csv_value(sweep.grid.back()) << " (" << sweep.grid.size()
                    << " points)\n";
            for (Mode m : modes)
                summary << metric_prefix << mode_name(m) << "_at_grid_end: "
                        << format_csv_value(rows.back().metric[static_cast<int>(m)]) << "\n";
        }

        files.emplace_back("summary.txt", summary.str());

        ordered_json j;
        j["tool"] = "rislink";
        j["experiment"] = experiment_name(manifest.experiment);
        j["scenario_file"] = manifest.scenario_ref;
        j["trials"] = trials;
        j["seed"] = seed;
        if (manifest.experiment != Experiment::Single && manifest.experiment != Experiment::Cdf) {
            SweepSpec sweep = manifest.sweep.value_or(
                SweepSpec{experiment_axis(manifest.experiment), {}});
            if (sweep.grid.empty()) sweep.grid = default_grid(sweep.axis);
            j["sweep"] = {{"axis", sweep_axis_name(sweep.axis)}, {"grid", sweep.grid}};
        }
        j["scenario"] = scenario_json(cfg);
        ordered_json outputs = ordered_json::array();
        for (const auto& [name, content] : files) {
            write_file(manifest.out_dir / name, content);
            char hex[20];
            std::snprintf(hex, sizeof(hex), "%016llx",
                          static_cast<unsigned long long>(fnv1a64(content.data(), content.size())));
            outputs.push_back({{"file", name}, {"bytes", content.size()}, {"fnv1a64", hex}});
        }
        j["outputs"] = outputs;
        write_file(manifest.out_dir / "manifest.json", j.dump(2) + "\n");
        return 0;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 1;
    }
}

}  // namespace rislink
