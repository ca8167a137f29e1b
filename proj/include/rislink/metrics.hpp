// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "rislink/ris.hpp"

namespace rislink {

struct RadioParams {
    double p_tx_dbm = 30.0;
    double g_t_dbi = 10.0;
    double g_r_dbi = 3.0;
    double noise_psd_dbm_hz = -174.0;
    double bandwidth_hz = 400e6;

    void validate() const {
        if (!(bandwidth_hz > 0.0)) throw std::domain_error("radio: bandwidth must be > 0 Hz");
        for (double v : {p_tx_dbm, g_t_dbi, g_r_dbi, noise_psd_dbm_hz})
            if (!std::isfinite(v)) throw std::domain_error("radio: parameters must be finite");
    }
};

/// Thermal noise power over the signal bandwidth, dBm.
double noise_power_dbm(const RadioParams& params);

/// Link-budget SNR for a squared channel magnitude |h|^2.
double snr_from_gain(double channel_gain, const RadioParams& params);

double snr_linear(std::complex<double> h, const RadioParams& params);

/// Shannon spectral efficiency log2(1 + snr), bit/s/Hz.
double spectral_efficiency(double snr);

struct CdfPoint {
    double value;
    double cum_prob;
};

/// Right-continuous empirical CDF as sorted (value, P[X <= value]) steps,
/// duplicates merged. Throws on empty input.
std::vector<CdfPoint> empirical_cdf(std::span<const double> samples);

/// Fraction of samples >= r_min. Throws on empty input or negative r_min.
double coverage_probability(std::span<const double> samples, double r_min);

/// LoS probability of the cascaded two-hop path: the product of the two
/// hop LoS probabilities, given horizontal hop distances.
double e2e_los_probability(double d_tx_ris_m, double d_ris_rx_m);

/// Per-mode spectral-efficiency samples from one batch of trials. All modes
/// are evaluated on common random numbers, so the sequences are aligned and
/// of equal length.
struct MetricSamples {
    std::uint64_t seed = 0;
    std::size_t trials = 0;
    std::array<std::vector<double>, kNumModes> se;

    const std::vector<double>& of(Mode m) const { return se[static_cast<int>(m)]; }
    std::vector<double>& of(Mode m) { return se[static_cast<int>(m)]; }
};

/// Deterministic sequential mean; 0 is not a legal input.
double mean(std::span<const double> values);

}  // namespace rislink
