#pragma once

#include <cstdint>

#include "uavsec/geometry.hpp"

namespace uavsec {

/// Straight-road mobility: the IoT device advances dx meters per time step
/// along x at ground level; the relay flies at a fixed height with its x
/// position scaled from the device's by the speed rate.
struct MobilityParams {
    double dx{15.0};           // meters per step
    double speed_rate{1.0};    // relay x / device x; >1 leads, <1 lags, 1 follows
    std::uint64_t n_steps{100};  // final step index; a run yields n_steps + 1 records
    Position3D iot_start{0.0, 0.0, 0.0};
    double uav_height{20.0};   // meters
    double fixed_y{0.0};       // shared y coordinate of the moving nodes
};

/// Device position at a step: x grows by dx per step, ground level.
inline Position3D iot_position(std::uint64_t step, const MobilityParams& params) {
    return {params.iot_start.x + static_cast<double>(step) * params.dx, params.fixed_y, 0.0};
}

/// Relay position at a step: x is the speed rate times the device's x.
inline Position3D uav_position(std::uint64_t step, const MobilityParams& params) {
    return {params.speed_rate * iot_position(step, params).x, params.fixed_y, params.uav_height};
}

} // namespace uavsec
