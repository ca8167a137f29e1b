// SPDX-License-Identifier: Apache-2.0

#include "rislink/sizing.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "rislink/engine.hpp"

namespace rislink {

namespace {

// Shares the exact arithmetic of run_trials + scenario_metric: spectral
// efficiency per trial from a gain, then mean or coverage.
double metric_from_gains(const std::vector<double>& gains, const ScenarioConfig& scenario) {
    const double budget_db = scenario.radio.p_tx_dbm + scenario.radio.g_t_dbi +
                             scenario.radio.g_r_dbi - noise_power_dbm(scenario.radio);
    const double budget = std::pow(10.0, budget_db / 10.0);
    std::vector<double> se(gains.size());
    for (std::size_t t = 0; t < gains.size(); ++t) se[t] = std::log2(1.0 + budget * gains[t]);
    if (scenario.qos_r_bps_hz) return coverage_probability(se, *scenario.qos_r_bps_hz);
    return mean(se);
}

}  // namespace

double scenario_metric(const ScenarioConfig& scenario, Mode mode, std::size_t trials,
                       std::uint64_t seed, const EngineOptions& opts) {
    const MetricSamples samples = run_trials(scenario, trials, seed, opts);
    if (scenario.qos_r_bps_hz)
        return coverage_probability(samples.of(mode), *scenario.qos_r_bps_hz);
    return mean(samples.of(mode));
}

double sizing_target(const ScenarioConfig& scenario, std::size_t trials,
                     std::uint64_t seed, const EngineOptions& opts) {
    return scenario_metric(scenario, Mode::StaticOnly, trials, seed, opts);
}

std::optional<long> required_elements_simulated(const ScenarioConfig& scenario,
                                                double metric_target, long n_low,
                                                long n_high, std::size_t trials,
                                                std::uint64_t seed,
                                                const EngineOptions& opts) {
    if (!scenario.ris)
        throw std::domain_error("required_elements_simulated: scenario has no RIS panel");
    if (!(n_low >= 1) || !(n_low <= n_high))
        throw std::domain_error("required_elements_simulated: need 1 <= n_low <= n_high");
    if (trials == 0) throw std::domain_error("required_elements_simulated: trials must be > 0");

    // The per-trial element fades are prefix-stable across counts (common
    // random numbers), so the metric is exactly non-decreasing in N and one
    // coarse profile pass brackets the crossover; a second dense pass then
    // pins the smallest admissible count. Gains captured this way are
    // bit-identical to independent runs at each count.
    std::vector<int> coarse{static_cast<int>(n_low)};
    for (double v = static_cast<double>(n_low); v < static_cast<double>(n_high);) {
        v = std::min(v * std::pow(2.0, 0.25) + 1.0, static_cast<double>(n_high));
        coarse.push_back(static_cast<int>(std::floor(v)));
    }
    coarse.erase(std::unique(coarse.begin(), coarse.end()), coarse.end());

    const auto coarse_gains = ris_only_gain_profile(scenario, coarse, trials, seed, opts);
    std::vector<double> coarse_metric(coarse.size());
    for (std::size_t k = 0; k < coarse.size(); ++k)
        coarse_metric[k] = metric_from_gains(coarse_gains[k], scenario);

    if (coarse_metric.front() >= metric_target) return n_low;
    if (coarse_metric.back() < metric_target) return std::nullopt;

    std::size_t hi_idx = 1;
    while (coarse_metric[hi_idx] < metric_target) ++hi_idx;
    const long bracket_lo = coarse[hi_idx - 1];  // metric < target here
    const long bracket_hi = coarse[hi_idx];      // metric >= target here

    std::vector<int> dense;
    dense.reserve(static_cast<std::size_t>(bracket_hi - bracket_lo));
    for (long n = bracket_lo + 1; n <= bracket_hi; ++n) dense.push_back(static_cast<int>(n));
    const auto dense_gains = ris_only_gain_profile(scenario, dense, trials, seed, opts);

    std::size_t lo = 0, hi = dense.size() - 1;  // invariant: metric(dense[hi]) >= target
    while (lo < hi) {
        const std::size_t mid = lo + (hi - lo) / 2;
        if (metric_from_gains(dense_gains[mid], scenario) >= metric_target)
            hi = mid;
        else
            lo = mid + 1;
    }
    return dense[hi];
}

}  // namespace rislink
