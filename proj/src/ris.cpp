// SPDX-License-Identifier: Apache-2.0

#include "rislink/ris.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "rislink/kernels.hpp"

namespace rislink {

namespace {
constexpr double kSpeedOfLight = 299792458.0;
constexpr double kPi = std::numbers::pi;
}

const char* mode_name(Mode m) {
    switch (m) {
        case Mode::StaticOnly: return "static_only";
        case Mode::RisOnly: return "ris_only";
        case Mode::RisPlusStatic: return "ris_plus_static";
    }
    return "unknown";
}

Mode parse_mode(const std::string& name) {
    if (name == "static_only" || name == "static-only") return Mode::StaticOnly;
    if (name == "ris_only" || name == "ris-only") return Mode::RisOnly;
    if (name == "ris_plus_static" || name == "ris-plus-static") return Mode::RisPlusStatic;
    throw std::invalid_argument("unknown mode: " + name);
}

double wrap_phase(double theta) {
    const double two_pi = 2.0 * kPi;
    double wrapped = std::fmod(theta + kPi, two_pi);
    if (wrapped < 0.0) wrapped += two_pi;
    return wrapped - kPi;
}

std::vector<std::complex<double>> element_products(const HopRealization& tx_ris,
                                                   const HopRealization& ris_rx,
                                                   const RisPanel& panel) {
    panel.validate();
    const std::size_t n = static_cast<std::size_t>(panel.n_elements);
    if (tx_ris.element_fades.size() != n || ris_rx.element_fades.size() != n)
        throw std::invalid_argument(
            "element_products: hop fade counts must equal panel.n_elements (" +
            std::to_string(tx_ris.element_fades.size()) + ", " +
            std::to_string(ris_rx.element_fades.size()) + " vs " + std::to_string(n) + ")");
    const double a_sr = link_amplitude(tx_ris.path_loss_db, tx_ris.shadow_db);
    const double a_rd = link_amplitude(ris_rx.path_loss_db, ris_rx.shadow_db);
    const double g_e = std::pow(10.0, panel.element_gain_dbi / 20.0);
    const double scale = g_e * g_e * a_sr * a_rd;
    std::vector<std::complex<double>> products(n);
    for (std::size_t i = 0; i < n; ++i)
        products[i] = scale * tx_ris.element_fades[i] * ris_rx.element_fades[i];
    return products;
}

PhaseConfig optimal_phases(std::complex<double> static_coeff,
                           std::span<const std::complex<double>> products) {
    if (products.empty())
        throw std::invalid_argument("optimal_phases: products must be non-empty");
    const double ref = std::arg(static_coeff);  // arg(0) = 0
    PhaseConfig cfg;
    cfg.theta.resize(products.size());
    for (std::size_t i = 0; i < products.size(); ++i)
        cfg.theta[i] = wrap_phase(ref - std::arg(products[i]));
    return cfg;
}

std::complex<double> effective_channel(const CascadedChannel& cascade,
                                       const PhaseConfig& phases) {
    std::complex<double> h{0.0, 0.0};
    if (cascade.mode != Mode::RisOnly) h += cascade.static_coeff;
    if (cascade.mode == Mode::StaticOnly) return h;
    const std::size_t n = cascade.element_products.size();
    if (phases.theta.size() != n)
        throw std::invalid_argument("effective_channel: phase count " +
                                    std::to_string(phases.theta.size()) +
                                    " does not match element count " + std::to_string(n));
    std::vector<double> re(n), im(n), c(n), s(n);
    for (std::size_t i = 0; i < n; ++i) {
        re[i] = cascade.element_products[i].real();
        im[i] = cascade.element_products[i].imag();
        c[i] = std::cos(phases.theta[i]);
        s[i] = std::sin(phases.theta[i]);
    }
    return h + kernels::rotated_sum(re.data(), im.data(), c.data(), s.data(), n);
}

void validate_sizing_query(const SizingQuery& q, bool allow_any_kappa) {
    if (!(q.fc_ghz > 0.0) || !std::isfinite(q.fc_ghz))
        throw std::domain_error("sizing: fc must be > 0 GHz");
    if (!(q.d3d_m > 0.0) || !std::isfinite(q.d3d_m))
        throw std::domain_error("sizing: d3d must be > 0 m");
    if (!allow_any_kappa && !(q.kappa > 40.0 && q.kappa < 45.0))
        throw std::domain_error("sizing: kappa must lie in (40, 45) unless overridden");
    if (allow_any_kappa && !(q.kappa > 0.0))
        throw std::domain_error("sizing: kappa must be > 0");
}

double required_elements_real(const SizingQuery& q) {
    return q.kappa * q.fc_ghz * std::pow(q.d3d_m, 0.25);
}

long required_elements_formula(const SizingQuery& q) {
    return static_cast<long>(std::ceil(required_elements_real(q)));
}

double panel_area_m2(const RisPanel& panel, double spacing_wavelengths) {
    panel.validate();
    if (!(spacing_wavelengths > 0.0))
        throw std::domain_error("panel_area: spacing must be > 0 wavelengths");
    const double lambda = kSpeedOfLight / (panel.fc_ghz * 1e9);
    const double pitch = spacing_wavelengths * lambda;
    return static_cast<double>(panel.n_elements) * pitch * pitch;
}

}  // namespace rislink
