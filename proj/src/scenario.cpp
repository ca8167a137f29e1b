// SPDX-License-Identifier: Apache-2.0

#include "rislink/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "rislink/engine.hpp"

namespace rislink {

namespace {

// 15 m offset at 30 deg azimuth: the always-LoS clearance used when a RIS
// is pinned next to an endpoint.
constexpr double kNearNodeOffsetX = 7.5;                  // 15 sin(30 deg)
constexpr double kNearNodeOffsetY = 12.990381056766580;   // 15 cos(30 deg)
constexpr double kRisHeight = 5.0;
constexpr double kRoiRadius = 18.0;  // keeps the RIS-user hop always-LoS

}  // namespace

const char* use_case_name(UseCase u) {
    switch (u) {
        case UseCase::UC1: return "uc1";
        case UseCase::UC2: return "uc2";
        case UseCase::UC3: return "uc3";
        case UseCase::UC4: return "uc4";
        case UseCase::Custom: return "custom";
    }
    return "unknown";
}

UseCase parse_use_case(const std::string& name) {
    if (name == "uc1") return UseCase::UC1;
    if (name == "uc2") return UseCase::UC2;
    if (name == "uc3") return UseCase::UC3;
    if (name == "uc4") return UseCase::UC4;
    if (name == "custom") return UseCase::Custom;
    throw std::invalid_argument("unknown use case: " + name);
}

void ScenarioConfig::validate() const {
    if (!(carrier_ghz >= 7.0 && carrier_ghz <= 24.0))
        throw std::domain_error("scenario: carrier_ghz must lie in [7, 24]");
    validate_node(tx, "tx");
    if (rx_fixed.has_value() == rx_region.has_value())
        throw std::domain_error("scenario: exactly one of a fixed receiver and a user region is required");
    if (!(cell_radius_m > 0.0)) throw std::domain_error("scenario: cell_radius_m must be > 0");
    if (!(min_user_tx_distance_m >= 0.0) || min_user_tx_distance_m >= cell_radius_m)
        throw std::domain_error("scenario: min_user_tx_distance_m must be in [0, cell_radius)");
    if (rx_fixed) {
        validate_node(*rx_fixed, "rx");
        if (horizontal_distance_m(tx, *rx_fixed) > cell_radius_m + 1e-9)
            throw std::domain_error("scenario: rx lies outside the cell radius");
    }
    if (rx_region) {
        const UserRegion& r = *rx_region;
        if (!(r.radius_m > 0.0)) throw std::domain_error("scenario: region radius_m must be > 0");
        if (r.kind == UserRegion::Kind::RoiDisc && r.radius_m > kRoiRadius)
            throw std::domain_error("scenario: roi-disc radius must be <= 18 m");
        if (!(r.user_height_m >= 0.0) || !std::isfinite(r.user_height_m))
            throw std::domain_error("scenario: user_height_m must be finite and >= 0");
        validate_node(r.center, "region center");
        if (horizontal_distance_m(tx, r.center) + r.radius_m > cell_radius_m + 1e-9)
            throw std::domain_error("scenario: user region extends outside the cell radius");
    }
    if (ris) {
        ris->validate();
        if (ris->fc_ghz != carrier_ghz)
            throw std::domain_error("scenario: RIS carrier must match carrier_ghz");
        if (horizontal_distance_m(tx, ris->center) > cell_radius_m + 1e-9)
            throw std::domain_error("scenario: RIS lies outside the cell radius");
    }
    radio.validate();
    channel.validate();
    if (qos_r_bps_hz && !(*qos_r_bps_hz >= 0.0))
        throw std::domain_error("scenario: qos_r_bps_hz must be >= 0");
    if (modes.empty()) throw std::domain_error("scenario: modes must be non-empty");
    for (Mode m : modes)
        if (m != Mode::StaticOnly && !ris)
            throw std::domain_error("scenario: RIS modes require a RIS panel");
}

ScenarioConfig build_use_case(UseCase id) {
    ScenarioConfig cfg;
    cfg.use_case = id;
    cfg.tx = {0.0, 0.0, 10.0};
    RisPanel panel;
    panel.n_elements = 2000;
    panel.fc_ghz = cfg.carrier_ghz;
    switch (id) {
        case UseCase::UC1:
            cfg.rx_fixed = Node3D{0.0, 100.0, 2.5};
            panel.center = {25.0, 50.0, kRisHeight};
            cfg.los_static = LosMode::ForcedNlos;
            cfg.los_tx_ris = LosMode::ForcedLos;
            cfg.los_ris_rx = LosMode::ForcedLos;
            break;
        case UseCase::UC2:
            cfg.rx_region = UserRegion{UserRegion::Kind::CellDisc, Node3D{0.0, 0.0, 0.0}, 200.0, 1.5};
            panel.center = {kNearNodeOffsetX, kNearNodeOffsetY, kRisHeight};
            cfg.los_tx_ris = LosMode::ForcedLos;
            break;
        case UseCase::UC3:
            cfg.rx_region = UserRegion{UserRegion::Kind::RoiDisc, Node3D{100.0, 100.0, 0.0}, kRoiRadius, 1.5};
            panel.center = {100.0, 100.0, kRisHeight};
            cfg.los_ris_rx = LosMode::ForcedLos;
            break;
        case UseCase::UC4:
            cfg.rx_fixed = Node3D{0.0, 200.0, 1.5};
            panel.center = {kNearNodeOffsetX, 200.0 - kNearNodeOffsetY, kRisHeight};
            cfg.los_ris_rx = LosMode::ForcedLos;
            break;
        case UseCase::Custom:
            break;
    }
    if (id != UseCase::Custom) {
        cfg.ris = panel;
        cfg.validate();
    }
    // the custom base stays partial until the caller fills in a receiver
    return cfg;
}

Node3D ris_sweep_position(double ris_y_m, double tx_y_m, double rx_y_m) {
    if (!(tx_y_m < ris_y_m && ris_y_m < rx_y_m))
        throw std::domain_error("ris_sweep_position: ris_y must lie strictly between the endpoints");
    const double tan30 = std::tan(std::numbers::pi / 6.0);
    const double mid = 0.5 * (tx_y_m + rx_y_m);
    const double along = ris_y_m <= mid ? ris_y_m - tx_y_m : rx_y_m - ris_y_m;
    return {tan30 * along, ris_y_m, kRisHeight};
}

std::vector<Node3D> drop_users(const UserRegion& region, std::size_t count,
                               const Node3D& tx, double min_tx_distance_m, Rng& rng) {
    if (count < 1) throw std::invalid_argument("drop_users: count must be >= 1");
    if (!(region.radius_m >= 0.0)) throw std::domain_error("drop_users: radius must be >= 0");
    std::vector<Node3D> users;
    users.reserve(count);
    constexpr int kMaxAttempts = 100000;
    for (std::size_t i = 0; i < count; ++i) {
        int attempts = 0;
        for (;;) {
            if (++attempts > kMaxAttempts)
                throw std::runtime_error(
                    "drop_users: could not place a user outside the transmitter "
                    "clearance; region and min distance are incompatible");
            const double r = region.radius_m * std::sqrt(rng.uniform());
            const double phi = Rng::two_pi() * rng.uniform();
            Node3D u{region.center.x + r * std::cos(phi),
                     region.center.y + r * std::sin(phi), region.user_height_m};
            if (horizontal_distance_m(u, tx) >= min_tx_distance_m) {
                users.push_back(u);
                break;
            }
        }
    }
    return users;
}

const char* sweep_axis_name(SweepAxis a) {
    switch (a) {
        case SweepAxis::TxPowerDbm: return "tx_power_dbm";
        case SweepAxis::QosR: return "qos_r";
        case SweepAxis::NElements: return "n_elements";
        case SweepAxis::RisY: return "ris_y";
    }
    return "unknown";
}

void SweepSpec::validate() const {
    if (grid.empty()) throw std::domain_error("sweep: grid must be non-empty");
    for (std::size_t i = 0; i + 1 < grid.size(); ++i)
        if (!(grid[i] < grid[i + 1]))
            throw std::domain_error("sweep: grid must be strictly increasing");
    if (axis == SweepAxis::NElements)
        for (double v : grid)
            if (!(v >= 1.0) || v != std::floor(v))
                throw std::domain_error("sweep: n_elements grid must hold positive integers");
    if (axis == SweepAxis::QosR && !(grid.front() >= 0.0))
        throw std::domain_error("sweep: qos grid must be >= 0");
}

std::vector<double> default_grid(SweepAxis axis) {
    std::vector<double> g;
    switch (axis) {
        case SweepAxis::TxPowerDbm:
            for (int p = 0; p <= 50; p += 5) g.push_back(p);
            break;
        case SweepAxis::QosR:
            for (int i = 0; i <= 40; ++i) g.push_back(0.25 * i);
            break;
        case SweepAxis::NElements:
            for (double n : {125.0, 250.0, 500.0, 1000.0, 2000.0, 4000.0, 8000.0, 16000.0})
                g.push_back(n);
            break;
        case SweepAxis::RisY:
            for (int y = 10; y <= 190; y += 10) g.push_back(y);
            break;
    }
    return g;
}

namespace {

std::array<double, kNumModes> metric_row(const MetricSamples& samples,
                                         const std::optional<double>& qos) {
    std::array<double, kNumModes> row{};
    for (int m = 0; m < kNumModes; ++m) {
        if (qos)
            row[m] = coverage_probability(samples.se[m], *qos);
        else
            row[m] = mean(samples.se[m]);
    }
    return row;
}

}  // namespace

std::vector<SweepRow> run_sweep(const ScenarioConfig& scenario, const SweepSpec& sweep,
                                std::size_t trials, std::uint64_t seed,
                                const EngineOptions& opts) {
    scenario.validate();
    sweep.validate();
    if (trials == 0) throw std::domain_error("run_sweep: trials must be > 0");

    std::vector<SweepRow> rows;
    rows.reserve(sweep.grid.size());

    switch (sweep.axis) {
        case SweepAxis::TxPowerDbm: {
            const ChannelGains gains = run_channel_trials(scenario, trials, seed, opts);
            for (double p : sweep.grid) {
                RadioParams radio = scenario.radio;
                radio.p_tx_dbm = p;
                const MetricSamples samples = se_from_gains(gains, radio);
                rows.push_back({p, metric_row(samples, scenario.qos_r_bps_hz), std::nullopt});
            }
            break;
        }
        case SweepAxis::QosR: {
            const MetricSamples samples = run_trials(scenario, trials, seed, opts);
            for (double r : sweep.grid) {
                std::array<double, kNumModes> m{};
                for (int i = 0; i < kNumModes; ++i)
                    m[i] = coverage_probability(samples.se[i], r);
                rows.push_back({r, m, std::nullopt});
            }
            break;
        }
        case SweepAxis::NElements: {
            if (!scenario.ris)
                throw std::domain_error("run_sweep: n_elements axis requires a RIS panel");
            for (double n : sweep.grid) {
                ScenarioConfig point = scenario;
                point.ris->n_elements = static_cast<int>(n);
                const MetricSamples samples = run_trials(point, trials, seed, opts);
                rows.push_back({n, metric_row(samples, scenario.qos_r_bps_hz), std::nullopt});
            }
            break;
        }
        case SweepAxis::RisY: {
            if (!scenario.ris)
                throw std::domain_error("run_sweep: ris_y axis requires a RIS panel");
            if (!scenario.rx_fixed)
                throw std::domain_error("run_sweep: ris_y axis requires a fixed receiver");
            for (double y : sweep.grid) {
                ScenarioConfig point = scenario;
                point.ris->center = ris_sweep_position(y, scenario.tx.y, scenario.rx_fixed->y);
                const MetricSamples samples = run_trials(point, trials, seed, opts);
                SweepRow row{y, metric_row(samples, scenario.qos_r_bps_hz), std::nullopt};
                row.e2e_los = e2e_los_probability(
                    horizontal_distance_m(scenario.tx, point.ris->center),
                    horizontal_distance_m(point.ris->center, *scenario.rx_fixed));
                rows.push_back(row);
            }
            break;
        }
    }
    return rows;
}

}  // namespace rislink
