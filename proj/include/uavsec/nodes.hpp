#pragma once

#include <string>
#include <vector>

#include "uavsec/geometry.hpp"

namespace uavsec {

struct BaseStation {
    std::string id;
    Position3D position;
    double tx_power_w{0.1};
};

/// Fixed infrastructure and powers for a scenario. The first base station in
/// the list is the primary one: single-station strategies use it exclusively.
struct NodeSet {
    std::vector<BaseStation> base_stations;
    Position3D eavesdropper;
    Position3D iot_start;
    double uav_tx_power_w{0.01};
};

} // namespace uavsec
