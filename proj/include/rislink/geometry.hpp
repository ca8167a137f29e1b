// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace rislink {

/// A position in meters. z is height above ground.
struct Node3D {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
};

inline double horizontal_distance_m(const Node3D& a, const Node3D& b) {
    const double dx = a.x - b.x;
    const double dy = a.y - b.y;
    return std::sqrt(dx * dx + dy * dy);
}

inline double distance_3d_m(const Node3D& a, const Node3D& b) {
    const double dx = a.x - b.x;
    const double dy = a.y - b.y;
    const double dz = a.z - b.z;
    return std::sqrt(dx * dx + dy * dy + dz * dz);
}

inline void validate_node(const Node3D& n, const std::string& what) {
    if (!std::isfinite(n.x) || !std::isfinite(n.y) || !std::isfinite(n.z))
        throw std::invalid_argument(what + ": coordinates must be finite");
    if (n.z < 0.0)
        throw std::invalid_argument(what + ": height must be >= 0 m");
}

/// One radio hop between two nodes. h_bs/h_ut are the higher/lower
/// endpoint heights; the terminal-height correction and the breakpoint
/// check use them.
struct LinkGeometry {
    double d2d_m = 0.0;
    double d3d_m = 0.0;
    double h_ut_m = 0.0;
    double h_bs_m = 0.0;
    double fc_ghz = 0.0;

    static LinkGeometry between(const Node3D& a, const Node3D& b, double fc_ghz) {
        LinkGeometry g;
        g.d2d_m = horizontal_distance_m(a, b);
        g.d3d_m = distance_3d_m(a, b);
        g.h_ut_m = std::min(a.z, b.z);
        g.h_bs_m = std::max(a.z, b.z);
        g.fc_ghz = fc_ghz;
        g.validate();
        return g;
    }

    void validate() const {
        if (!(d2d_m > 0.0) || !std::isfinite(d2d_m))
            throw std::domain_error("link geometry: d2d must be > 0");
        if (!(d3d_m >= d2d_m) || !std::isfinite(d3d_m))
            throw std::domain_error("link geometry: d3d must be >= d2d");
        if (!(fc_ghz >= 7.0 && fc_ghz <= 24.0))
            throw std::domain_error("link geometry: carrier must lie in [7, 24] GHz");
        if (!std::isfinite(h_ut_m) || h_ut_m < 0.0 || !std::isfinite(h_bs_m) || h_bs_m < 0.0)
            throw std::domain_error("link geometry: heights must be finite and >= 0");
    }
};

}  // namespace rislink
