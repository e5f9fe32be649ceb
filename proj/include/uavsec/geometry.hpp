#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace uavsec {

/// A node location in meters on a 3D Cartesian grid. z is height above
/// ground; ground nodes have z = 0.
struct Position3D {
    double x{0.0};
    double y{0.0};
    double z{0.0};

    friend bool operator==(const Position3D&, const Position3D&) = default;
};

inline bool is_finite(const Position3D& p) {
    return std::isfinite(p.x) && std::isfinite(p.y) && std::isfinite(p.z);
}

/// Euclidean distance between two nodes.
inline double distance3(const Position3D& a, const Position3D& b) {
    return std::hypot(a.x - b.x, a.y - b.y, a.z - b.z);
}

/// Ground-plane distance, ignoring heights.
inline double horizontal_distance(const Position3D& a, const Position3D& b) {
    return std::hypot(a.x - b.x, a.y - b.y);
}

/// Elevation angle in degrees seen from a ground receiver toward a
/// transmitter at height h_t with horizontal offset r.
///
/// Returns 90 for a perfectly vertical link (r = 0, h_t > 0), the
/// continuous limit of atan(h_t / r). The angle is undefined when both
/// arguments are zero.
inline double elevation_angle_deg(double h_t, double r) {
    if (!(h_t >= 0.0) || !(r >= 0.0)) {
        throw std::invalid_argument("elevation_angle_deg: h_t and r must be >= 0");
    }
    if (h_t == 0.0 && r == 0.0) {
        throw std::domain_error("elevation_angle_deg: angle undefined for co-located ground nodes");
    }
    return std::atan2(h_t, r) * (180.0 / std::numbers::pi);
}

} // namespace uavsec
