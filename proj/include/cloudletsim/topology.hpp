#pragma once

#include <cstddef>
#include <vector>

namespace cloudletsim {

struct Point {
  double x_m = 0.0;
  double y_m = 0.0;
};

// One network site. On the co-located grid every site is simultaneously a
// base station and the cloudlet attached to it; a capacity of 0 makes the
// site BS-only (it can serve UEs but hosts no avatars).
struct Site {
  int index = 0;
  Point position;
  int capacity = 0;  // avatar slots s_j
};

// Immutable after construction; safe to share across concurrent runs.
// delay_ms(j, k) is the one-way BS<->cloudlet delay, epsilon * distance.
class Topology {
 public:
  Topology(std::vector<Site> sites, double width_m, double height_m,
           double epsilon_ms_per_m, bool grid, int rows, int cols,
           double cell_size_m);

  int num_sites() const { return static_cast<int>(sites_.size()); }
  int num_cloudlets() const { return num_sites(); }
  int num_bs() const { return num_sites(); }
  const Site& site(int j) const { return sites_[static_cast<std::size_t>(j)]; }
  const std::vector<Site>& sites() const { return sites_; }

  double width_m() const { return width_m_; }
  double height_m() const { return height_m_; }
  double epsilon_ms_per_m() const { return epsilon_; }

  bool is_grid() const { return grid_; }
  int grid_rows() const { return rows_; }
  int grid_cols() const { return cols_; }
  double cell_size_m() const { return cell_size_m_; }

  double delay_ms(int cloudlet_j, int bs_k) const {
    return delay_matrix_[static_cast<std::size_t>(cloudlet_j) *
                             static_cast<std::size_t>(num_sites()) +
                         static_cast<std::size_t>(bs_k)];
  }

  int total_capacity() const { return total_capacity_; }

 private:
  std::vector<Site> sites_;
  std::vector<double> delay_matrix_;  // row-major |J| x |K|
  double width_m_;
  double height_m_;
  double epsilon_;
  bool grid_;
  int rows_;
  int cols_;
  double cell_size_m_;
  int total_capacity_;
};

// Dense encoding of the binary placement variable: one cloudlet index per
// avatar. Exactly-one-cloudlet-per-avatar is structural.
struct Assignment {
  std::vector<int> avatar_to_cloudlet;

  int size() const { return static_cast<int>(avatar_to_cloudlet.size()); }
  int operator[](int i) const {
    return avatar_to_cloudlet[static_cast<std::size_t>(i)];
  }
  int& operator[](int i) {
    return avatar_to_cloudlet[static_cast<std::size_t>(i)];
  }
};

// Dense encoding of the binary association variable: one BS index per UE.
struct Association {
  std::vector<int> ue_to_bs;

  int size() const { return static_cast<int>(ue_to_bs.size()); }
  int operator[](int i) const { return ue_to_bs[static_cast<std::size_t>(i)]; }
  int& operator[](int i) { return ue_to_bs[static_cast<std::size_t>(i)]; }
};

// Per-cloudlet avatar counts for a given assignment.
std::vector<int> occupancy(const Assignment& assignment, int num_cloudlets);

// True iff every per-cloudlet count is within its site capacity.
bool capacity_feasible(const Assignment& assignment, const Topology& topology);

// rows x cols co-located sites at cell centers, uniform capacity, full
// delay matrix precomputed. Site index = row * cols + col.
Topology build_grid_topology(int rows, int cols, double cell_size_m,
                             double epsilon_ms_per_m, int capacity);

// Topology from an explicit site list (non-grid layouts). BS k is co-located
// with site k; bounds are taken as the smallest box containing all sites
// unless explicit bounds are given.
Topology build_explicit_topology(std::vector<Site> sites,
                                 double epsilon_ms_per_m, double width_m = 0.0,
                                 double height_m = 0.0);

// One-way core delay for avatar i: d[cloudlet(i)][bs(i)].
double core_delay(const Assignment& assignment, const Association& association,
                  const Topology& topology, int avatar);

}  // namespace cloudletsim
