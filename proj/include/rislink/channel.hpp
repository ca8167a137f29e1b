// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <stdexcept>

#include "rislink/geometry.hpp"
#include "rislink/rng.hpp"

namespace rislink {

enum class LosMode { ForcedLos, ForcedNlos, Probabilistic };

const char* los_mode_name(LosMode m);

/// Fading and shadowing knobs of the urban-microcell model. Defaults follow
/// the street-canyon parameterization; every value can be overridden from a
/// scenario file.
struct ChannelParams {
    double k_factor_db = 9.0;          // Rician K for LoS small-scale fading
    double shadow_sigma_los_db = 4.0;
    double shadow_sigma_nlos_db = 7.82;

    void validate() const {
        if (std::isnan(k_factor_db))
            throw std::domain_error("channel: k_factor_db must not be NaN");
        if (!(shadow_sigma_los_db >= 0.0) || !(shadow_sigma_nlos_db >= 0.0))
            throw std::domain_error("channel: shadow sigmas must be >= 0");
    }
};

/// One sampled propagation state of a hop.
struct LinkRealization {
    bool los = false;
    double path_loss_db = 0.0;
    double shadow_db = 0.0;
    std::complex<double> small_scale{1.0, 0.0};
};

/// Thrown when a geometry falls outside the supported below-breakpoint
/// regime; the model never extrapolates silently.
class UnsupportedRegimeError : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

/// Distance-dependent LoS probability of the urban-microcell model:
/// 1 for d2d <= 18 m, else 18/d + exp(-d/36) * (1 - 18/d).
double los_probability(double d2d_m);

/// Forced modes return their constant without consuming randomness;
/// probabilistic mode draws true with probability los_probability(d2d).
bool sample_los(LosMode mode, double d2d_m, Rng& rng);

/// Street-canyon breakpoint distance, 4 (h_bs - 1)(h_ut - 1) f_c / c.
double breakpoint_distance_m(const LinkGeometry& geom);

/// Street-canyon path loss in dB. LoS below the breakpoint:
/// 32.4 + 21 log10(d3d) + 20 log10(fc); beyond it the 40 log10(d3d) branch,
/// continuous at the breakpoint. nLoS: max of the LoS value and
/// 13.54 + 39.08 log10(d3d) + 20 log10(fc) - 0.6 (h_ut - 1.5).
/// Geometries beyond the model's 5 km validity range raise
/// UnsupportedRegimeError; nothing is extrapolated silently.
double path_loss_db(const LinkGeometry& geom, bool los);

/// Zero-mean log-normal shadow fading in dB, sigma per LoS state.
double sample_shadow_fading_db(bool los, const ChannelParams& params, Rng& rng);

/// Unit-mean-power small-scale coefficient. LoS draws Rician with
/// K = 10^(k_factor_db/10) and a uniform specular phase (drawn first),
/// nLoS draws CN(0,1). k_factor_db = +inf degenerates to a pure phasor.
std::complex<double> sample_small_scale(bool los, double k_factor_db, Rng& rng);

/// Deterministic linear amplitude 10^(-(pl_db - shadow_db)/20).
double link_amplitude(double pl_db, double shadow_db);

}  // namespace rislink
