#pragma once

// Umbrella header for the uavsec link-level secrecy simulator.

#include "uavsec/channel.hpp"
#include "uavsec/config.hpp"
#include "uavsec/fading.hpp"
#include "uavsec/geometry.hpp"
#include "uavsec/mobility.hpp"
#include "uavsec/nodes.hpp"
#include "uavsec/scenario.hpp"
#include "uavsec/secrecy.hpp"
#include "uavsec/sim.hpp"
#include "uavsec/trace_io.hpp"
