#include "cloudletsim/mobility.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace cloudletsim {

namespace {

Point draw_point(Rng& rng, const Topology& topology) {
  Point p;
  p.x_m = rng.uniform(0.0, topology.width_m());
  p.y_m = rng.uniform(0.0, topology.height_m());
  return p;
}

double distance(const Point& a, const Point& b) {
  const double dx = a.x_m - b.x_m;
  const double dy = a.y_m - b.y_m;
  return std::sqrt(dx * dx + dy * dy);
}

}  // namespace

UEState init_ue(Rng& rng, const Topology& topology,
                const MobilityConfig& config) {
  UEState s;
  s.position = draw_point(rng, topology);
  s.waypoint = draw_point(rng, topology);
  s.speed_mps = rng.uniform_positive(config.v_max_mps);
  return s;
}

UEState step_waypoint(const UEState& state, Rng& rng, const Topology& topology,
                      const MobilityConfig& config) {
  UEState s = state;
  double remaining_s = config.slot_seconds;
  while (remaining_s > 0.0) {
    const double to_waypoint_m = distance(s.position, s.waypoint);
    const double travel_m = s.speed_mps * remaining_s;
    if (travel_m < to_waypoint_m) {
      const double f = travel_m / to_waypoint_m;
      s.position.x_m += f * (s.waypoint.x_m - s.position.x_m);
      s.position.y_m += f * (s.waypoint.y_m - s.position.y_m);
      break;
    }
    // Reached the waypoint inside the slot: consume the leg's time and
    // start a fresh leg.
    s.position = s.waypoint;
    remaining_s -= to_waypoint_m / s.speed_mps;
    s.waypoint = draw_point(rng, topology);
    s.speed_mps = rng.uniform_positive(config.v_max_mps);
  }
  return s;
}

int associate(const Point& position, const Topology& topology) {
  if (topology.is_grid()) {
    const double cell = topology.cell_size_m();
    const int rows = topology.grid_rows();
    const int cols = topology.grid_cols();
    int c = static_cast<int>(std::floor(position.x_m / cell));
    int r = static_cast<int>(std::floor(position.y_m / cell));
    // A point exactly on a shared cell edge belongs to the lower-index cell.
    if (c > 0 && static_cast<double>(c) * cell == position.x_m) --c;
    if (r > 0 && static_cast<double>(r) * cell == position.y_m) --r;
    c = std::clamp(c, 0, cols - 1);
    r = std::clamp(r, 0, rows - 1);
    return r * cols + c;
  }
  int best = 0;
  double best_d = std::numeric_limits<double>::infinity();
  for (int k = 0; k < topology.num_sites(); ++k) {
    const double dx = topology.site(k).position.x_m - position.x_m;
    const double dy = topology.site(k).position.y_m - position.y_m;
    const double d = dx * dx + dy * dy;
    if (d < best_d) {
      best_d = d;
      best = k;
    }
  }
  return best;
}

}  // namespace cloudletsim
