// SPDX-License-Identifier: Apache-2.0

#include "rislink/engine.hpp"

#include <cmath>
#include <functional>
#include <thread>

#include "rislink/kernels.hpp"

namespace rislink {

namespace {

void fill_fades(bool los, double k_factor_db, std::size_t n, Rng& rng,
                double* re, double* im) {
    for (std::size_t i = 0; i < n; ++i) {
        const std::complex<double> c = sample_small_scale(los, k_factor_db, rng);
        re[i] = c.real();
        im[i] = c.imag();
    }
}

struct HopState {
    bool los = false;
    double amplitude = 0.0;  // deterministic part, from path loss and shadowing
};

HopState sample_hop_state(const ScenarioConfig& scenario, const LinkGeometry& geom,
                          LosMode mode, std::uint64_t seed, std::uint64_t t,
                          StreamPurpose los_purpose, StreamPurpose shadow_purpose) {
    HopState hop;
    Rng los_rng = Rng::for_stream(seed, t, los_purpose);
    hop.los = sample_los(mode, geom.d2d_m, los_rng);
    Rng shadow_rng = Rng::for_stream(seed, t, shadow_purpose);
    const double shadow = sample_shadow_fading_db(hop.los, scenario.channel, shadow_rng);
    hop.amplitude = link_amplitude(path_loss_db(geom, hop.los), shadow);
    return hop;
}

Node3D trial_rx(const ScenarioConfig& scenario, std::uint64_t seed, std::uint64_t t) {
    if (!scenario.rx_region) return *scenario.rx_fixed;
    Rng drop_rng = Rng::for_stream(seed, t, StreamPurpose::UserDrop);
    return drop_users(*scenario.rx_region, 1, scenario.tx, scenario.min_user_tx_distance_m,
                      drop_rng)[0];
}

void run_workers(std::size_t trials, unsigned requested_threads,
                 const std::function<void(std::size_t, std::size_t)>& worker) {
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    unsigned n_threads = requested_threads != 0 ? requested_threads : hw;
    n_threads = static_cast<unsigned>(std::min<std::size_t>(n_threads, trials));
    if (n_threads <= 1) {
        worker(0, trials);
        return;
    }
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(n_threads);
    pool.reserve(n_threads);
    const std::size_t chunk = (trials + n_threads - 1) / n_threads;
    for (unsigned i = 0; i < n_threads; ++i) {
        const std::size_t t0 = static_cast<std::size_t>(i) * chunk;
        const std::size_t t1 = std::min(trials, t0 + chunk);
        if (t0 >= t1) break;
        pool.emplace_back([&, i, t0, t1] {
            try {
                worker(t0, t1);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    for (const auto& err : errors)
        if (err) std::rethrow_exception(err);
}

}  // namespace

ChannelGains run_channel_trials(const ScenarioConfig& scenario, std::size_t trials,
                                std::uint64_t seed, const EngineOptions& opts) {
    scenario.validate();

    ChannelGains out;
    out.seed = seed;
    out.trials = trials;
    for (auto& v : out.gain) v.assign(trials, 0.0);
    if (trials == 0) return out;

    const bool with_ris = scenario.ris.has_value();
    const bool with_region = scenario.rx_region.has_value();
    const std::size_t n_elem =
        with_ris ? static_cast<std::size_t>(scenario.ris->n_elements) : 0;
    const double k_db = scenario.channel.k_factor_db;
    const double g_e = with_ris ? std::pow(10.0, scenario.ris->element_gain_dbi / 20.0) : 1.0;
    const double g_e2 = g_e * g_e;

    // The transmitter-RIS hop geometry never depends on the trial.
    std::optional<LinkGeometry> geom_sr;
    if (with_ris)
        geom_sr = LinkGeometry::between(scenario.tx, scenario.ris->center, scenario.carrier_ghz);

    auto worker = [&](std::size_t t0, std::size_t t1) {
        std::vector<double> re_a(n_elem), im_a(n_elem), re_b(n_elem), im_b(n_elem);
        for (std::size_t t = t0; t < t1; ++t) {
            const Node3D rx = with_region ? trial_rx(scenario, seed, t) : *scenario.rx_fixed;

            // Static path
            const LinkGeometry geom_sd =
                LinkGeometry::between(scenario.tx, rx, scenario.carrier_ghz);
            const HopState sd = sample_hop_state(scenario, geom_sd, scenario.los_static, seed, t,
                                                 StreamPurpose::LosStatic,
                                                 StreamPurpose::ShadowStatic);
            Rng fade_sd_rng = Rng::for_stream(seed, t, StreamPurpose::FadeStatic);
            const std::complex<double> s_sd = sample_small_scale(sd.los, k_db, fade_sd_rng);
            const double static_amp = sd.amplitude * std::abs(s_sd);

            out.of(Mode::StaticOnly)[t] = static_amp * static_amp;

            if (!with_ris) {
                out.of(Mode::RisOnly)[t] = 0.0;
                out.of(Mode::RisPlusStatic)[t] = static_amp * static_amp;
                continue;
            }

            // Transmitter-RIS hop
            const HopState sr = sample_hop_state(scenario, *geom_sr, scenario.los_tx_ris, seed, t,
                                                 StreamPurpose::LosTxRis,
                                                 StreamPurpose::ShadowTxRis);
            Rng fade_sr_rng = Rng::for_stream(seed, t, StreamPurpose::FadeTxRis);
            fill_fades(sr.los, k_db, n_elem, fade_sr_rng, re_a.data(), im_a.data());

            // RIS-receiver hop
            const LinkGeometry geom_rd =
                LinkGeometry::between(scenario.ris->center, rx, scenario.carrier_ghz);
            const HopState rd = sample_hop_state(scenario, geom_rd, scenario.los_ris_rx, seed, t,
                                                 StreamPurpose::LosRisRx,
                                                 StreamPurpose::ShadowRisRx);
            Rng fade_rd_rng = Rng::for_stream(seed, t, StreamPurpose::FadeRisRx);
            fill_fades(rd.los, k_db, n_elem, fade_rd_rng, re_b.data(), im_b.data());

            // Optimal co-phasing aligns every cascaded term with the static
            // path, so the combined magnitude is |static| + sum_n |product_n|.
            const double sum_abs =
                kernels::sum_abs_products(re_a.data(), im_a.data(), re_b.data(), im_b.data(), n_elem);
            const double cascade_amp = g_e2 * sr.amplitude * rd.amplitude * sum_abs;

            out.of(Mode::RisOnly)[t] = cascade_amp * cascade_amp;
            const double combined = static_amp + cascade_amp;
            out.of(Mode::RisPlusStatic)[t] = combined * combined;
        }
    };

    run_workers(trials, opts.threads, worker);
    return out;
}

std::vector<std::vector<double>> ris_only_gain_profile(const ScenarioConfig& scenario,
                                                       const std::vector<int>& counts,
                                                       std::size_t trials, std::uint64_t seed,
                                                       const EngineOptions& opts) {
    scenario.validate();
    if (!scenario.ris)
        throw std::domain_error("ris_only_gain_profile: scenario has no RIS panel");
    if (counts.empty()) throw std::domain_error("ris_only_gain_profile: counts must be non-empty");
    for (std::size_t i = 0; i < counts.size(); ++i) {
        if (counts[i] < 1) throw std::domain_error("ris_only_gain_profile: counts must be >= 1");
        if (i > 0 && counts[i] <= counts[i - 1])
            throw std::domain_error("ris_only_gain_profile: counts must be ascending");
    }

    std::vector<std::vector<double>> gains(counts.size());
    for (auto& g : gains) g.assign(trials, 0.0);
    if (trials == 0) return gains;

    const std::size_t n_max = static_cast<std::size_t>(counts.back());
    const double k_db = scenario.channel.k_factor_db;
    const double g_e = std::pow(10.0, scenario.ris->element_gain_dbi / 20.0);
    const double g_e2 = g_e * g_e;
    const bool with_region = scenario.rx_region.has_value();
    const LinkGeometry geom_sr =
        LinkGeometry::between(scenario.tx, scenario.ris->center, scenario.carrier_ghz);

    auto worker = [&](std::size_t t0, std::size_t t1) {
        std::vector<double> re_a(n_max), im_a(n_max), re_b(n_max), im_b(n_max);
        for (std::size_t t = t0; t < t1; ++t) {
            const Node3D rx = with_region ? trial_rx(scenario, seed, t) : *scenario.rx_fixed;

            const HopState sr = sample_hop_state(scenario, geom_sr, scenario.los_tx_ris, seed, t,
                                                 StreamPurpose::LosTxRis,
                                                 StreamPurpose::ShadowTxRis);
            Rng fade_sr_rng = Rng::for_stream(seed, t, StreamPurpose::FadeTxRis);
            fill_fades(sr.los, k_db, n_max, fade_sr_rng, re_a.data(), im_a.data());

            const LinkGeometry geom_rd =
                LinkGeometry::between(scenario.ris->center, rx, scenario.carrier_ghz);
            const HopState rd = sample_hop_state(scenario, geom_rd, scenario.los_ris_rx, seed, t,
                                                 StreamPurpose::LosRisRx,
                                                 StreamPurpose::ShadowRisRx);
            Rng fade_rd_rng = Rng::for_stream(seed, t, StreamPurpose::FadeRisRx);
            fill_fades(rd.los, k_db, n_max, fade_rd_rng, re_b.data(), im_b.data());

            // Streamed four-lane accumulation; reducing at a capture point
            // reproduces kernels::sum_abs_products of that prefix bit for bit.
            const double scale = g_e2 * sr.amplitude * rd.amplitude;
            double lane[4] = {0.0, 0.0, 0.0, 0.0};
            std::size_t next = 0;
            for (std::size_t i = 0; i < n_max; ++i) {
                lane[i & 3] +=
                    kernels::abs_product_term(re_a[i], im_a[i], re_b[i], im_b[i]);
                while (next < counts.size() &&
                       static_cast<std::size_t>(counts[next]) == i + 1) {
                    const double sum_abs = (lane[0] + lane[2]) + (lane[1] + lane[3]);
                    const double cascade_amp = scale * sum_abs;
                    gains[next][t] = cascade_amp * cascade_amp;
                    ++next;
                }
            }
        }
    };

    run_workers(trials, opts.threads, worker);
    return gains;
}

MetricSamples se_from_gains(const ChannelGains& gains, const RadioParams& radio) {
    const double budget_db =
        radio.p_tx_dbm + radio.g_t_dbi + radio.g_r_dbi - noise_power_dbm(radio);
    const double budget = std::pow(10.0, budget_db / 10.0);
    MetricSamples samples;
    samples.seed = gains.seed;
    samples.trials = gains.trials;
    for (int m = 0; m < kNumModes; ++m) {
        samples.se[m].resize(gains.gain[m].size());
        for (std::size_t t = 0; t < gains.gain[m].size(); ++t)
            samples.se[m][t] = std::log2(1.0 + budget * gains.gain[m][t]);
    }
    return samples;
}

MetricSamples run_trials(const ScenarioConfig& scenario, std::size_t trials,
                         std::uint64_t seed, const EngineOptions& opts) {
    return se_from_gains(run_channel_trials(scenario, trials, seed, opts), scenario.radio);
}

}  // namespace rislink
