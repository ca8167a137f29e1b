// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <span>
#include <vector>

#include "rislink/channel.hpp"
#include "rislink/geometry.hpp"

namespace rislink {

/// Comparison modes: direct path only, reflected path only, or both.
enum class Mode { StaticOnly = 0, RisOnly = 1, RisPlusStatic = 2 };
inline constexpr int kNumModes = 3;

const char* mode_name(Mode m);   // "static_only", "ris_only", "ris_plus_static"
Mode parse_mode(const std::string& name);

struct RisPanel {
    int n_elements = 2000;
    Node3D center{};
    double element_gain_dbi = 0.0;  // per element, applied once per hop
    double fc_ghz = 7.8;

    void validate() const {
        if (n_elements < 1) throw std::domain_error("ris: n_elements must be >= 1");
        if (!std::isfinite(element_gain_dbi))
            throw std::domain_error("ris: element_gain_dbi must be finite");
        validate_node(center, "ris center");
    }
};

/// Per-element phase shifts, continuous-valued in [-pi, pi).
struct PhaseConfig {
    std::vector<double> theta;
};

/// Wrap an angle into [-pi, pi).
double wrap_phase(double theta);

/// One sampled state of a transmitter-RIS or RIS-receiver hop: the hop-level
/// LoS state, path loss and shadowing are shared by all elements (far-field,
/// panel-center geometry); small-scale fades are i.i.d. per element.
struct HopRealization {
    bool los = false;
    double path_loss_db = 0.0;
    double shadow_db = 0.0;
    std::vector<std::complex<double>> element_fades;
};

struct CascadedChannel {
    std::complex<double> static_coeff{0.0, 0.0};
    std::vector<std::complex<double>> element_products;
    Mode mode = Mode::RisPlusStatic;
};

/// Per-element cascaded coefficients
///   product_n = g_e^2 * a_sr * a_rd * s_sr,n * s_rd,n
/// with a = deterministic hop amplitude from path loss and shadowing and
/// g_e the linear element gain (applied once per hop). Both hops must carry
/// exactly panel.n_elements fades.
std::vector<std::complex<double>> element_products(const HopRealization& tx_ris,
                                                   const HopRealization& ris_rx,
                                                   const RisPanel& panel);

/// Co-phasing solution: theta_n = arg(static) - arg(product_n), wrapped to
/// [-pi, pi). The resulting combined magnitude is |static| + sum |product_n|.
PhaseConfig optimal_phases(std::complex<double> static_coeff,
                           std::span<const std::complex<double>> products);

/// h = static (unless ris-only) + sum_n product_n e^{j theta_n}
/// (unless static-only).
std::complex<double> effective_channel(const CascadedChannel& cascade,
                                       const PhaseConfig& phases);

/// Query for the element-count sizing rule N >= kappa * f_c * d3d^(1/4).
struct SizingQuery {
    double fc_ghz = 7.8;
    double d3d_m = 100.0;
    double kappa = 42.5;
};

/// Throws unless kappa lies in the calibrated open interval (40, 45);
/// pass allow_any_kappa to accept explicit overrides.
void validate_sizing_query(const SizingQuery& q, bool allow_any_kappa = false);

/// kappa * f_c * d3d^(1/4), before rounding.
double required_elements_real(const SizingQuery& q);

/// ceil(kappa * f_c * d3d^(1/4)).
long required_elements_formula(const SizingQuery& q);

/// Physical aperture n * (spacing * lambda)^2 in m^2.
double panel_area_m2(const RisPanel& panel, double spacing_wavelengths = 0.5);

}  // namespace rislink
