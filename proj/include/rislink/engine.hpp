// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "rislink/metrics.hpp"
#include "rislink/scenario.hpp"

namespace rislink {

/// Squared effective-channel magnitudes |h|^2 per mode per trial, before any
/// power scaling. Spectral efficiency at any transmit power derives from
/// these, which is how power sweeps share one set of channel draws.
struct ChannelGains {
    std::uint64_t seed = 0;
    std::size_t trials = 0;
    std::array<std::vector<double>, kNumModes> gain;

    const std::vector<double>& of(Mode m) const { return gain[static_cast<int>(m)]; }
    std::vector<double>& of(Mode m) { return gain[static_cast<int>(m)]; }
};

/// Runs seeded Monte-Carlo trials. Each trial derives its substreams from
/// (seed, trial index, purpose) only — see StreamPurpose — so the output is
/// bit-identical for a fixed seed regardless of thread count or scheduling.
/// Per trial, in order: receiver drop (region scenarios), LoS states, shadow
/// fading, static-path fade, per-element fades of both hops; then all three
/// modes are evaluated on those same draws. RIS modes use the optimal
/// co-phasing magnitude |h| = |static| + sum_n |product_n|.
ChannelGains run_channel_trials(const ScenarioConfig& scenario, std::size_t trials,
                                std::uint64_t seed, const EngineOptions& opts = {});

/// Ris-only |h|^2 per trial at several element counts from one sampling
/// pass: fades are drawn once up to the largest count and the cascade sum
/// is captured at each count. Because the per-trial fade streams have the
/// prefix property, gains[k][t] is bit-identical to what
/// run_channel_trials with n_elements = counts[k] reports for the ris-only
/// mode on the same seed. counts must be ascending and >= 1.
std::vector<std::vector<double>> ris_only_gain_profile(const ScenarioConfig& scenario,
                                                       const std::vector<int>& counts,
                                                       std::size_t trials, std::uint64_t seed,
                                                       const EngineOptions& opts = {});

/// Spectral-efficiency samples for the given radio parameters.
MetricSamples se_from_gains(const ChannelGains& gains, const RadioParams& radio);

/// run_channel_trials followed by se_from_gains at the scenario's radio
/// parameters.
MetricSamples run_trials(const ScenarioConfig& scenario, std::size_t trials,
                         std::uint64_t seed, const EngineOptions& opts = {});

}  // namespace rislink
