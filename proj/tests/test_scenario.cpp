// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cmath>

#include "rislink/engine.hpp"
#include "rislink/scenario.hpp"

using namespace rislink;

TEST_CASE("use-case geometries match the published setup") {
    SUBCASE("uc1") {
        const ScenarioConfig cfg = build_use_case(UseCase::UC1);
        CHECK(cfg.tx.x == 0.0);
        CHECK(cfg.tx.y == 0.0);
        CHECK(cfg.tx.z == 10.0);
        REQUIRE(cfg.rx_fixed.has_value());
        CHECK(cfg.rx_fixed->x == 0.0);
        CHECK(cfg.rx_fixed->y == 100.0);
        CHECK(cfg.rx_fixed->z == 2.5);
        REQUIRE(cfg.ris.has_value());
        CHECK(cfg.ris->center.x == 25.0);
        CHECK(cfg.ris->center.y == 50.0);
        CHECK(cfg.ris->center.z == 5.0);
        CHECK(cfg.ris->n_elements == 2000);
        CHECK(cfg.los_static == LosMode::ForcedNlos);
        CHECK(cfg.los_tx_ris == LosMode::ForcedLos);
        CHECK(cfg.los_ris_rx == LosMode::ForcedLos);
        CHECK(cfg.radio.g_t_dbi == 10.0);
        CHECK(cfg.radio.g_r_dbi == 3.0);
        CHECK(cfg.radio.bandwidth_hz == 400e6);
        CHECK(cfg.radio.noise_psd_dbm_hz == -174.0);
        CHECK(cfg.trials == 100000);
    }

    SUBCASE("uc2 RIS sits 15 m from the transmitter, inside the always-LoS range") {
        const ScenarioConfig cfg = build_use_case(UseCase::UC2);
        REQUIRE(cfg.ris.has_value());
        const double d = horizontal_distance_m(cfg.tx, cfg.ris->center);
        CHECK(d == doctest::Approx(15.0).epsilon(1e-12));
        CHECK(d < 18.0);
        CHECK(cfg.ris->center.x == doctest::Approx(7.5));
        CHECK(cfg.ris->center.y == doctest::Approx(12.99).epsilon(1e-3));
        REQUIRE(cfg.rx_region.has_value());
        CHECK(cfg.rx_region->kind == UserRegion::Kind::CellDisc);
        CHECK(cfg.rx_region->radius_m == 200.0);
        CHECK(cfg.rx_region->user_height_m == 1.5);
        CHECK(cfg.los_tx_ris == LosMode::ForcedLos);
        CHECK(cfg.los_static == LosMode::Probabilistic);
    }

    SUBCASE("uc3 ROI disc sits under the RIS") {
        const ScenarioConfig cfg = build_use_case(UseCase::UC3);
        REQUIRE(cfg.ris.has_value());
        CHECK(cfg.ris->center.x == 100.0);
        CHECK(cfg.ris->center.y == 100.0);
        REQUIRE(cfg.rx_region.has_value());
        CHECK(cfg.rx_region->kind == UserRegion::Kind::RoiDisc);
        CHECK(cfg.rx_region->radius_m == 18.0);
        CHECK(cfg.rx_region->center.x == 100.0);
        CHECK(cfg.rx_region->center.y == 100.0);
        CHECK(cfg.los_ris_rx == LosMode::ForcedLos);
    }

    SUBCASE("uc4 cell edge") {
        const ScenarioConfig cfg = build_use_case(UseCase::UC4);
        REQUIRE(cfg.rx_fixed.has_value());
        CHECK(cfg.rx_fixed->x == 0.0);
        CHECK(cfg.rx_fixed->y == 200.0);
        CHECK(cfg.rx_fixed->z == 1.5);
        REQUIRE(cfg.ris.has_value());
        const double d = horizontal_distance_m(*cfg.rx_fixed, cfg.ris->center);
        CHECK(d == doctest::Approx(15.0).epsilon(1e-12));
        CHECK(cfg.ris->center.x == doctest::Approx(7.5));
        CHECK(cfg.ris->center.y == doctest::Approx(187.01).epsilon(1e-4));
        CHECK(cfg.los_ris_rx == LosMode::ForcedLos);
        CHECK(cfg.los_tx_ris == LosMode::Probabilistic);
    }
}

TEST_CASE("ris_sweep_position") {
    const Node3D at50 = ris_sweep_position(50.0);
    CHECK(at50.x == doctest::Approx(28.867513459481288).epsilon(1e-12));
    CHECK(at50.y == 50.0);
    CHECK(at50.z == 5.0);
    const Node3D at150 = ris_sweep_position(150.0);
    CHECK(at150.x == at50.x);  // mirror position, identical offset
    const Node3D at100 = ris_sweep_position(100.0);
    CHECK(at100.x == doctest::Approx(57.735026918962576).epsilon(1e-12));

    SUBCASE("symmetric about the midpoint") {
        for (double y : {20.0, 45.0, 80.0, 95.0})
            CHECK(ris_sweep_position(y).x == ris_sweep_position(200.0 - y).x);
    }

    SUBCASE("out-of-range positions rejected") {
        CHECK_THROWS_AS(ris_sweep_position(0.0), std::domain_error);
        CHECK_THROWS_AS(ris_sweep_position(200.0), std::domain_error);
        CHECK_THROWS_AS(ris_sweep_position(-5.0), std::domain_error);
    }
}

TEST_CASE("drop_users") {
    const Node3D tx{0.0, 0.0, 10.0};

    SUBCASE("cell drops stay in the disc and respect the clearance") {
        UserRegion region{UserRegion::Kind::CellDisc, {0.0, 0.0, 0.0}, 200.0, 1.5};
        Rng rng(14);
        const auto users = drop_users(region, 2000, tx, 10.0, rng);
        REQUIRE(users.size() == 2000);
        for (const auto& u : users) {
            CHECK(horizontal_distance_m(u, region.center) <= 200.0 + 1e-9);
            CHECK(horizontal_distance_m(u, tx) >= 10.0);
            CHECK(u.z == 1.5);
        }
    }

    SUBCASE("mean squared radius of a clean disc is R^2/2") {
        UserRegion region{UserRegion::Kind::CellDisc, {100.0, 0.0, 0.0}, 50.0, 1.5};
        Rng rng(15);
        const auto users = drop_users(region, 100000, tx, 10.0, rng);
        double acc = 0.0;
        for (const auto& u : users) {
            const double r = horizontal_distance_m(u, region.center);
            acc += r * r;
        }
        CHECK(acc / users.size() == doctest::Approx(50.0 * 50.0 / 2.0).epsilon(0.01));
    }

    SUBCASE("degenerate radius collapses to the center") {
        UserRegion region{UserRegion::Kind::RoiDisc, {100.0, 100.0, 0.0}, 1e-9, 1.5};
        Rng rng(16);
        const auto users = drop_users(region, 1, tx, 10.0, rng);
        CHECK(users[0].x == doctest::Approx(100.0).epsilon(1e-9));
        CHECK(users[0].y == doctest::Approx(100.0).epsilon(1e-9));
    }

    SUBCASE("count must be positive; impossible clearance is an error") {
        UserRegion region{UserRegion::Kind::RoiDisc, {0.0, 0.0, 0.0}, 2.0, 1.5};
        Rng rng(17);
        CHECK_THROWS_AS(drop_users(region, 0, tx, 10.0, rng), std::invalid_argument);
        CHECK_THROWS_AS(drop_users(region, 1, tx, 10.0, rng), std::runtime_error);
    }

    SUBCASE("uc3 drops always keep the RIS hop in the always-LoS range") {
        const ScenarioConfig cfg = build_use_case(UseCase::UC3);
        Rng rng(18);
        const auto users = drop_users(*cfg.rx_region, 10000, cfg.tx,
                                      cfg.min_user_tx_distance_m, rng);
        for (const auto& u : users) {
            const double d = horizontal_distance_m(u, cfg.ris->center);
            CHECK(d <= 18.0 + 1e-9);
            CHECK(los_probability(std::max(d, 1e-6)) == 1.0);
        }
    }
}

TEST_CASE("scenario validation rejects broken configurations") {
    ScenarioConfig cfg = build_use_case(UseCase::UC1);
    CHECK_NOTHROW(cfg.validate());

    SUBCASE("carrier outside the band") {
        cfg.set_carrier(30.0);
        CHECK_THROWS_AS(cfg.validate(), std::domain_error);
    }
    SUBCASE("both or neither receiver specification") {
        cfg.rx_region = UserRegion{};
        CHECK_THROWS_AS(cfg.validate(), std::domain_error);
        cfg.rx_region.reset();
        cfg.rx_fixed.reset();
        CHECK_THROWS_AS(cfg.validate(), std::domain_error);
    }
    SUBCASE("positions must stay inside the cell") {
        cfg.rx_fixed = Node3D{0.0, 250.0, 1.5};
        CHECK_THROWS_AS(cfg.validate(), std::domain_error);
    }
    SUBCASE("roi disc must keep the always-LoS guarantee") {
        ScenarioConfig uc3 = build_use_case(UseCase::UC3);
        uc3.rx_region->radius_m = 25.0;
        CHECK_THROWS_AS(uc3.validate(), std::domain_error);
    }
    SUBCASE("RIS modes need a panel") {
        cfg.ris.reset();
        CHECK_THROWS_AS(cfg.validate(), std::domain_error);
        cfg.modes = {Mode::StaticOnly};
        CHECK_NOTHROW(cfg.validate());
    }
    SUBCASE("negative region radius") {
        ScenarioConfig uc2 = build_use_case(UseCase::UC2);
        uc2.rx_region->radius_m = -5.0;
        CHECK_THROWS_AS(uc2.validate(), std::domain_error);
    }
}

TEST_CASE("sweep specs") {
    SUBCASE("grids must be strictly increasing and non-empty") {
        CHECK_THROWS_AS((SweepSpec{SweepAxis::TxPowerDbm, {}}).validate(), std::domain_error);
        CHECK_THROWS_AS((SweepSpec{SweepAxis::TxPowerDbm, {0.0, 0.0}}).validate(),
                        std::domain_error);
        CHECK_THROWS_AS((SweepSpec{SweepAxis::NElements, {10.5}}).validate(), std::domain_error);
        CHECK_NOTHROW((SweepSpec{SweepAxis::QosR, {0.0, 1.0}}).validate());
    }
    SUBCASE("default grids are valid") {
        for (SweepAxis axis : {SweepAxis::TxPowerDbm, SweepAxis::QosR, SweepAxis::NElements,
                               SweepAxis::RisY})
            CHECK_NOTHROW((SweepSpec{axis, default_grid(axis)}).validate());
    }
}

TEST_CASE("run_sweep behavior") {
    ScenarioConfig cfg = build_use_case(UseCase::UC1);
    cfg.ris->n_elements = 64;

    SUBCASE("mean SE is non-decreasing in transmit power for every mode") {
        const SweepSpec sweep{SweepAxis::TxPowerDbm, default_grid(SweepAxis::TxPowerDbm)};
        const auto rows = run_sweep(cfg, sweep, 400, 1);
        REQUIRE(rows.size() == 11);
        for (std::size_t i = 1; i < rows.size(); ++i)
            for (int m = 0; m < kNumModes; ++m)
                CHECK(rows[i].metric[m] >= rows[i - 1].metric[m]);
    }

    SUBCASE("coverage is non-increasing in the QoS threshold and lies in [0,1]") {
        const SweepSpec sweep{SweepAxis::QosR, default_grid(SweepAxis::QosR)};
        const auto rows = run_sweep(cfg, sweep, 400, 1);
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (int m = 0; m < kNumModes; ++m) {
                CHECK(rows[i].metric[m] >= 0.0);
                CHECK(rows[i].metric[m] <= 1.0);
                if (i > 0) CHECK(rows[i].metric[m] <= rows[i - 1].metric[m]);
            }
    }

    SUBCASE("mean SE of the reflected path is non-decreasing in the element count") {
        const SweepSpec sweep{SweepAxis::NElements, {16.0, 64.0, 256.0}};
        const auto rows = run_sweep(cfg, sweep, 300, 1);
        const int ris_only = static_cast<int>(Mode::RisOnly);
        CHECK(rows[0].metric[ris_only] <= rows[1].metric[ris_only]);
        CHECK(rows[1].metric[ris_only] <= rows[2].metric[ris_only]);
    }

    SUBCASE("placement sweep reports the end-to-end LoS probability") {
        ScenarioConfig placement = build_use_case(UseCase::UC1);
        placement.rx_fixed = Node3D{0.0, 200.0, 2.0};
        placement.los_static = LosMode::Probabilistic;
        placement.los_tx_ris = LosMode::Probabilistic;
        placement.los_ris_rx = LosMode::Probabilistic;
        placement.ris->n_elements = 32;
        const SweepSpec sweep{SweepAxis::RisY, {10.0, 100.0, 190.0}};
        const auto rows = run_sweep(placement, sweep, 200, 1);
        REQUIRE(rows.size() == 3);
        for (const auto& row : rows) {
            REQUIRE(row.e2e_los.has_value());
            CHECK(*row.e2e_los > 0.0);
            CHECK(*row.e2e_los <= 1.0);
        }
        CHECK(*rows[1].e2e_los < *rows[0].e2e_los);
        CHECK(*rows[1].e2e_los < *rows[2].e2e_los);
    }

    SUBCASE("inapplicable axes are configuration errors") {
        const ScenarioConfig uc2 = build_use_case(UseCase::UC2);
        CHECK_THROWS_AS(run_sweep(uc2, SweepSpec{SweepAxis::RisY, {50.0}}, 10, 1),
                        std::domain_error);
        ScenarioConfig bare = build_use_case(UseCase::UC1);
        bare.ris.reset();
        bare.modes = {Mode::StaticOnly};
        CHECK_THROWS_AS(run_sweep(bare, SweepSpec{SweepAxis::NElements, {8.0}}, 10, 1),
                        std::domain_error);
    }

    SUBCASE("coverage metric kicks in when the scenario carries a QoS threshold") {
        cfg.qos_r_bps_hz = 2.0;
        const SweepSpec sweep{SweepAxis::TxPowerDbm, {0.0, 25.0, 50.0}};
        const auto rows = run_sweep(cfg, sweep, 200, 1);
        for (const auto& row : rows)
            for (int m = 0; m < kNumModes; ++m) {
                CHECK(row.metric[m] >= 0.0);
                CHECK(row.metric[m] <= 1.0);
            }
        CHECK(rows.back().metric[0] >= rows.front().metric[0]);
    }
}
