// SPDX-License-Identifier: Apache-2.0

#include "rislink/channel.hpp"

#include <cmath>
#include <string>

namespace rislink {

namespace {
constexpr double kSpeedOfLight = 299792458.0;
}

const char* los_mode_name(LosMode m) {
    switch (m) {
        case LosMode::ForcedLos: return "forced-los";
        case LosMode::ForcedNlos: return "forced-nlos";
        case LosMode::Probabilistic: return "probabilistic";
    }
    return "unknown";
}

double los_probability(double d2d_m) {
    if (!std::isfinite(d2d_m) || d2d_m <= 0.0)
        throw std::domain_error("los_probability: d2d must be finite and > 0");
    if (d2d_m <= 18.0) return 1.0;
    const double ratio = 18.0 / d2d_m;
    return ratio + std::exp(-d2d_m / 36.0) * (1.0 - ratio);
}

bool sample_los(LosMode mode, double d2d_m, Rng& rng) {
    switch (mode) {
        case LosMode::ForcedLos: return true;
        case LosMode::ForcedNlos: return false;
        case LosMode::Probabilistic: return rng.bernoulli(los_probability(d2d_m));
    }
    throw std::logic_error("sample_los: invalid mode");
}

double breakpoint_distance_m(const LinkGeometry& geom) {
    const double h_bs_eff = geom.h_bs_m - 1.0;
    const double h_ut_eff = geom.h_ut_m - 1.0;
    if (h_bs_eff <= 0.0 || h_ut_eff <= 0.0) return 0.0;
    return 4.0 * h_bs_eff * h_ut_eff * geom.fc_ghz * 1e9 / kSpeedOfLight;
}

double path_loss_db(const LinkGeometry& geom, bool los) {
    geom.validate();
    if (geom.d2d_m > 5000.0)
        throw UnsupportedRegimeError("path_loss_db: d2d = " + std::to_string(geom.d2d_m) +
                                     " m exceeds the model's 5 km validity range");
    const double d_bp = breakpoint_distance_m(geom);
    double pl_los;
    if (geom.d2d_m < d_bp) {
        pl_los = 32.4 + 21.0 * std::log10(geom.d3d_m) + 20.0 * std::log10(geom.fc_ghz);
    } else if (d_bp > 0.0) {
        // Above-breakpoint LoS branch; continuous with the near branch at d_bp.
        const double dh = geom.h_bs_m - geom.h_ut_m;
        pl_los = 32.4 + 40.0 * std::log10(geom.d3d_m) + 20.0 * std::log10(geom.fc_ghz) -
                 9.5 * std::log10(d_bp * d_bp + dh * dh);
    } else {
        throw UnsupportedRegimeError(
            "path_loss_db: endpoint heights at or below 1 m leave no valid regime");
    }
    if (los) return pl_los;
    const double pl_nlos = 13.54 + 39.08 * std::log10(geom.d3d_m) +
                           20.0 * std::log10(geom.fc_ghz) - 0.6 * (geom.h_ut_m - 1.5);
    return std::max(pl_los, pl_nlos);
}

double sample_shadow_fading_db(bool los, const ChannelParams& params, Rng& rng) {
    params.validate();
    const double sigma = los ? params.shadow_sigma_los_db : params.shadow_sigma_nlos_db;
    if (sigma == 0.0) {
        return 0.0;  // degenerate override, no draw
    }
    return sigma * rng.gaussian();
}

std::complex<double> sample_small_scale(bool los, double k_factor_db, Rng& rng) {
    if (!los) return rng.complex_normal();
    const double phi = Rng::two_pi() * rng.uniform();
    if (std::isinf(k_factor_db) && k_factor_db > 0.0) {
        return {std::cos(phi), std::sin(phi)};
    }
    const double k = std::pow(10.0, k_factor_db / 10.0);
    const double specular = std::sqrt(k / (k + 1.0));
    const double diffuse = std::sqrt(1.0 / (k + 1.0));
    const std::complex<double> scatter = rng.complex_normal();
    return {specular * std::cos(phi) + diffuse * scatter.real(),
            specular * std::sin(phi) + diffuse * scatter.imag()};
}

double link_amplitude(double pl_db, double shadow_db) {
    if (!std::isfinite(pl_db) || !std::isfinite(shadow_db))
        throw std::domain_error("link_amplitude: inputs must be finite");
    return std::pow(10.0, -(pl_db - shadow_db) / 20.0);
}

}  // namespace rislink
