// SPDX-License-Identifier: Apache-2.0

#include "rislink/metrics.hpp"

#include <algorithm>
#include <cmath>

#include "rislink/channel.hpp"

namespace rislink {

double noise_power_dbm(const RadioParams& params) {
    params.validate();
    return params.noise_psd_dbm_hz + 10.0 * std::log10(params.bandwidth_hz);
}

double snr_from_gain(double channel_gain, const RadioParams& params) {
    if (!(channel_gain >= 0.0))
        throw std::domain_error("snr: channel gain must be >= 0");
    const double budget_db =
        params.p_tx_dbm + params.g_t_dbi + params.g_r_dbi - noise_power_dbm(params);
    return std::pow(10.0, budget_db / 10.0) * channel_gain;
}

double snr_linear(std::complex<double> h, const RadioParams& params) {
    return snr_from_gain(std::norm(h), params);
}

double spectral_efficiency(double snr) {
    if (!(snr >= 0.0)) throw std::domain_error("spectral_efficiency: snr must be >= 0");
    return std::log2(1.0 + snr);
}

std::vector<CdfPoint> empirical_cdf(std::span<const double> samples) {
    if (samples.empty()) throw std::invalid_argument("empirical_cdf: empty sample set");
    std::vector<double> sorted(samples.begin(), samples.end());
    std::sort(sorted.begin(), sorted.end());
    std::vector<CdfPoint> cdf;
    const double n = static_cast<double>(sorted.size());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (i + 1 < sorted.size() && sorted[i + 1] == sorted[i]) continue;
        cdf.push_back({sorted[i], static_cast<double>(i + 1) / n});
    }
    return cdf;
}

double coverage_probability(std::span<const double> samples, double r_min) {
    if (samples.empty()) throw std::invalid_argument("coverage_probability: empty sample set");
    if (!(r_min >= 0.0)) throw std::domain_error("coverage_probability: r_min must be >= 0");
    std::size_t count = 0;
    for (double v : samples)
        if (v >= r_min) ++count;
    return static_cast<double>(count) / static_cast<double>(samples.size());
}

double e2e_los_probability(double d_tx_ris_m, double d_ris_rx_m) {
    return los_probability(d_tx_ris_m) * los_probability(d_ris_rx_m);
}

double mean(std::span<const double> values) {
    if (values.empty()) throw std::invalid_argument("mean: empty input");
    double acc = 0.0;
    for (double v : values) acc += v;
    return acc / static_cast<double>(values.size());
}

}  // namespace rislink
