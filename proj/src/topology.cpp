#include "cloudletsim/topology.hpp"

#include <algorithm>
#include <cmath>

#include "cloudletsim/errors.hpp"

namespace cloudletsim {

Topology::Topology(std::vector<Site> sites, double width_m, double height_m,
                   double epsilon_ms_per_m, bool grid, int rows, int cols,
                   double cell_size_m)
    : sites_(std::move(sites)),
      width_m_(width_m),
      height_m_(height_m),
      epsilon_(epsilon_ms_per_m),
      grid_(grid),
      rows_(rows),
      cols_(cols),
      cell_size_m_(cell_size_m),
      total_capacity_(0) {
  const std::size_t n = sites_.size();
  delay_matrix_.assign(n * n, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) {
      const double dx = sites_[j].position.x_m - sites_[k].position.x_m;
      const double dy = sites_[j].position.y_m - sites_[k].position.y_m;
      delay_matrix_[j * n + k] = epsilon_ * std::sqrt(dx * dx + dy * dy);
    }
  }
  for (const Site& s : sites_) total_capacity_ += s.capacity;
}

std::vector<int> occupancy(const Assignment& assignment, int num_cloudlets) {
  std::vector<int> occ(static_cast<std::size_t>(num_cloudlets), 0);
  for (int j : assignment.avatar_to_cloudlet) ++occ[static_cast<std::size_t>(j)];
  return occ;
}

bool capacity_feasible(const Assignment& assignment,
                       const Topology& topology) {
  const std::vector<int> occ = occupancy(assignment, topology.num_cloudlets());
  for (int j = 0; j < topology.num_cloudlets(); ++j) {
    if (occ[static_cast<std::size_t>(j)] > topology.site(j).capacity)
      return false;
  }
  return true;
}

Topology build_grid_topology(int rows, int cols, double cell_size_m,
                             double epsilon_ms_per_m, int capacity) {
  if (rows < 1 || cols < 1) throw ConfigError("grid must be at least 1x1");
  if (cell_size_m <= 0.0) throw ConfigError("cell_size_m must be positive");
  if (epsilon_ms_per_m < 0.0) throw ConfigError("epsilon must be >= 0");
  if (capacity < 0) throw ConfigError("capacity must be >= 0");

  std::vector<Site> sites;
  sites.reserve(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols));
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      Site s;
      s.index = r * cols + c;
      s.position.x_m = (static_cast<double>(c) + 0.5) * cell_size_m;
      s.position.y_m = (static_cast<double>(r) + 0.5) * cell_size_m;
      s.capacity = capacity;
      sites.push_back(s);
    }
  }
  return Topology(std::move(sites), cols * cell_size_m, rows * cell_size_m,
                  epsilon_ms_per_m, /*grid=*/true, rows, cols, cell_size_m);
}

Topology build_explicit_topology(std::vector<Site> sites,
                                 double epsilon_ms_per_m, double width_m,
                                 double height_m) {
  if (sites.empty()) throw ConfigError("site list must not be empty");
  if (epsilon_ms_per_m < 0.0) throw ConfigError("epsilon must be >= 0");
  double w = width_m;
  double h = height_m;
  if (w <= 0.0 || h <= 0.0) {
    for (const Site& s : sites) {
      w = std::max(w, s.position.x_m);
      h = std::max(h, s.position.y_m);
    }
  }
  for (std::size_t i = 0; i < sites.size(); ++i) {
    sites[i].index = static_cast<int>(i);
    if (sites[i].capacity < 0) throw ConfigError("site capacity must be >= 0");
  }
  return Topology(std::move(sites), w, h, epsilon_ms_per_m, /*grid=*/false, 0,
                  0, 0.0);
}

double core_delay(const Assignment& assignment, const Association& association,
                  const Topology& topology, int avatar) {
  return topology.delay_ms(assignment[avatar], association[avatar]);
}

}  // namespace cloudletsim
