// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rislink/channel.hpp"
#include "rislink/geometry.hpp"
#include "rislink/metrics.hpp"
#include "rislink/ris.hpp"
#include "rislink/rng.hpp"

namespace rislink {

enum class UseCase { UC1, UC2, UC3, UC4, Custom };
const char* use_case_name(UseCase u);
UseCase parse_use_case(const std::string& name);

/// Receiver drop region: either the whole cell disc or a small
/// region-of-interest disc whose radius keeps the RIS-user link inside the
/// always-LoS range.
struct UserRegion {
    enum class Kind { CellDisc, RoiDisc };
    Kind kind = Kind::CellDisc;
    Node3D center{};       // disc center on the ground; z is ignored
    double radius_m = 200.0;
    double user_height_m = 1.5;
};

/// A fully resolved experiment description. Either rx_fixed or rx_region is
/// set, never both.
struct ScenarioConfig {
    UseCase use_case = UseCase::Custom;
    double carrier_ghz = 7.8;
    Node3D tx{0.0, 0.0, 10.0};
    std::optional<Node3D> rx_fixed;
    std::optional<UserRegion> rx_region;
    std::optional<RisPanel> ris;
    LosMode los_static = LosMode::Probabilistic;
    LosMode los_tx_ris = LosMode::Probabilistic;
    LosMode los_ris_rx = LosMode::Probabilistic;
    RadioParams radio;
    ChannelParams channel;
    std::optional<double> qos_r_bps_hz;  // when set, sweep metrics report coverage
    double cell_radius_m = 200.0;
    double min_user_tx_distance_m = 10.0;
    std::size_t trials = 100000;
    std::uint64_t seed = 1;
    std::vector<Mode> modes{Mode::StaticOnly, Mode::RisOnly, Mode::RisPlusStatic};

    void validate() const;

    /// Changes the carrier and keeps the RIS panel's carrier in sync.
    void set_carrier(double fc_ghz) {
        carrier_ghz = fc_ghz;
        if (ris) ris->fc_ghz = fc_ghz;
    }
};

/// Table-driven builders for the four studied deployments:
///  UC1 fixed wireless access: rx (0,100,2.5), RIS (25,50,5), static path
///      forced nLoS, both RIS hops forced LoS.
///  UC2 cell-wide capacity: users uniform in the 200 m cell at 1.5 m, RIS
///      15 m from the transmitter at 30 deg azimuth (always-LoS region),
///      transmitter-RIS hop forced LoS.
///  UC3 region of interest: RIS (100,100,5), users uniform in an 18 m disc
///      under it, RIS-user hop forced LoS.
///  UC4 cell edge: rx (0,200,1.5), RIS 15 m from the receiver at 30 deg
///      azimuth, RIS-receiver hop forced LoS.
ScenarioConfig build_use_case(UseCase id);

/// RIS placement along the tx-rx axis with a 30 deg azimuth offset toward
/// whichever endpoint is closer; z = 5 m.
Node3D ris_sweep_position(double ris_y_m, double tx_y_m = 0.0, double rx_y_m = 200.0);

/// Uniform drops over the disc (sqrt-radius transform), fixed height, with
/// a minimum horizontal clearance from the transmitter enforced by
/// rejection.
std::vector<Node3D> drop_users(const UserRegion& region, std::size_t count,
                               const Node3D& tx, double min_tx_distance_m, Rng& rng);

enum class SweepAxis { TxPowerDbm, QosR, NElements, RisY };
const char* sweep_axis_name(SweepAxis a);

struct SweepSpec {
    SweepAxis axis;
    std::vector<double> grid;

    void validate() const;
};

std::vector<double> default_grid(SweepAxis axis);

/// One sweep-table row: per-mode metric (mean SE, or coverage probability
/// when the scenario carries a QoS threshold; always coverage on the QoS
/// axis). The placement axis also reports the closed-form end-to-end LoS
/// probability.
struct SweepRow {
    double axis_value = 0.0;
    std::array<double, kNumModes> metric{};
    std::optional<double> e2e_los;
};

struct EngineOptions {
    unsigned threads = 0;  // 0 = hardware concurrency
};

std::vector<SweepRow> run_sweep(const ScenarioConfig& scenario, const SweepSpec& sweep,
                                std::size_t trials, std::uint64_t seed,
                                const EngineOptions& opts = {});

}  // namespace rislink
