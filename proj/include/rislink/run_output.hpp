// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "rislink/scenario.hpp"

namespace rislink {

enum class Experiment { Single, PowerSweep, QosSweep, ElementsSweep, PlacementSweep, Cdf };
const char* experiment_name(Experiment e);
Experiment parse_experiment(const std::string& name);

/// Everything that determines a run's output bytes: the resolved scenario,
/// the experiment, trials, seed, and destination. Executing the same
/// manifest twice produces byte-identical files.
struct RunManifest {
    std::string scenario_ref;  // path or label recorded in the manifest file
    ScenarioConfig scenario;
    Experiment experiment = Experiment::Single;
    std::optional<SweepSpec> sweep;  // defaulted from the experiment if absent
    std::size_t trials = 0;          // 0 = scenario.trials
    std::optional<std::uint64_t> seed;
    std::filesystem::path out_dir = "out";
    EngineOptions engine;
};

/// Runs the experiment and writes its CSV, a plain-text summary and a JSON
/// manifest (seed, trial count, per-file checksums) into out_dir.
/// Returns 0 on success, nonzero after printing a diagnostic to stderr.
int execute(const RunManifest& manifest);

/// Value formatting used in every CSV: 6 significant digits.
std::string format_csv_value(double v);

std::uint64_t fnv1a64(const void* data, std::size_t size);
std::uint64_t fnv1a64_file(const std::filesystem::path& path);

}  // namespace rislink
