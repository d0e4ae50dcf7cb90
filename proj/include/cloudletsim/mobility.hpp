#pragma once

#include "cloudletsim/rng.hpp"
#include "cloudletsim/topology.hpp"

namespace cloudletsim {

// Random-waypoint walker state. Position and waypoint stay within the
// topology bounds; speed is the current leg's speed in m/s.
struct UEState {
  Point position;
  Point waypoint;
  double speed_mps = 0.0;
};

struct MobilityConfig {
  double v_max_mps = 10.0;
  double slot_seconds = 300.0;
};

// Uniform initial position, with the first waypoint/speed drawn the same way
// step_waypoint draws them.
UEState init_ue(Rng& rng, const Topology& topology,
                const MobilityConfig& config);

// Advance one slot: move toward the waypoint at the leg speed; on arrival
// draw a fresh waypoint and a fresh speed in (0, v_max] and keep moving
// until the slot's time budget is spent. No pause at waypoints.
UEState step_waypoint(const UEState& state, Rng& rng, const Topology& topology,
                      const MobilityConfig& config);

// BS serving `position`: the grid cell containing it (ties on shared cell
// edges go to the lower index), or the nearest site for explicit layouts.
int associate(const Point& position, const Topology& topology);

}  // namespace cloudletsim
