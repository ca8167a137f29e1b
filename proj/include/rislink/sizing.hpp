// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>

#include "rislink/scenario.hpp"

namespace rislink {

/// The scenario's scalar figure of merit for one mode: coverage probability
/// at the scenario's QoS threshold when one is set, otherwise mean spectral
/// efficiency.
double scenario_metric(const ScenarioConfig& scenario, Mode mode, std::size_t trials,
                       std::uint64_t seed, const EngineOptions& opts = {});

/// Benchmark target for RIS dimensioning: the static-only metric on the
/// same seed the search will use.
double sizing_target(const ScenarioConfig& scenario, std::size_t trials,
                     std::uint64_t seed, const EngineOptions& opts = {});

/// Smallest element count in [n_low, n_high] whose ris-only metric reaches
/// the target. Candidate counts share one set of random numbers: every
/// trial's element fades come from a dedicated substream, so the metric is
/// exactly non-decreasing in N on a fixed seed (prefix property) and the
/// search is noise-free — a coarse one-pass profile brackets the crossover,
/// then bisection over a dense profile pins the minimal count. Returns
/// nullopt when even n_high falls short.
std::optional<long> required_elements_simulated(const ScenarioConfig& scenario,
                                                double metric_target, long n_low,
                                                long n_high, std::size_t trials,
                                                std::uint64_t seed,
                                                const EngineOptions& opts = {});

}  // namespace rislink
