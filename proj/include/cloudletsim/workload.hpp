#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "cloudletsim/rng.hpp"

namespace cloudletsim {

// One avatar's per-slot workload record. Trace mode and synthetic mode both
// produce exactly this shape; the engine never knows the source.
struct AvatarWorkload {
  double u_cpu = 0.0;
  double u_mem = 0.0;
  double u_disk = 0.0;
  double u_net = 0.0;
  double dirty_rate_pages_per_slot = 0.0;
  double bw_mu_mbps = 0.0;
  double bw_sigma = 0.0;
};

// Homogeneous avatar hardware.
struct AvatarSpec {
  double mem_capacity_bits = 4.0 * 1024.0 * 1024.0 * 1024.0 * 8.0;
  double bw_capacity_mbps = 500.0;
  double page_size_bits = 32768.0;
};

// CPU/memory/disk utilization rows loaded from a trace CSV. Each avatar's
// own sequence wraps cyclically when queried past its last slot.
class TraceTable {
 public:
  struct Row {
    double u_cpu, u_mem, u_disk;
  };

  int num_avatars() const { return static_cast<int>(rows_.size()); }
  // avatar and slot both wrap (avatar by table size, slot per avatar).
  const Row& at(int avatar, int slot) const;

  friend TraceTable load_trace(const std::string& path);
  friend TraceTable parse_trace(std::istream& in, const std::string& name);

 private:
  std::vector<std::vector<Row>> rows_;  // rows_[avatar][slot]
};

// Parse a trace CSV with header `avatar_id,slot,u_cpu,u_mem,u_disk`.
// Utilizations are decimal fractions in [0,1]; avatar ids must be dense from
// 0 and each avatar's slots dense from 0. Malformed rows report the line
// number; an empty file is a validation error.
TraceTable load_trace(const std::string& path);
TraceTable parse_trace(std::istream& in, const std::string& name);

// Draw bandwidth demand ~ N(mu, sigma^2) in Mbps, clamp into [0, capacity],
// return the utilization fraction demand/capacity.
double sample_bandwidth_util(Rng& rng, double mu_mbps, double sigma,
                             double capacity_mbps);

// Uniform in [0, max_pages].
double sample_dirty_rate(Rng& rng, double max_pages);

// pages/slot -> bits/s.
double dirty_rate_bits_per_s(double pages_per_slot, double page_size_bits,
                             double slot_seconds);

enum class DirtyRateMode { kPerSlot, kFixed };
enum class MigrationMemoryMode { kUsed, kFull };

struct WorkloadParams {
  AvatarSpec avatar;
  // Per-avatar bandwidth demand parameters: mu_i uniform in bw_mu_range,
  // sigma_i = sqrt(uniform in bw_var_range).
  double bw_mu_range_lo = 0.0, bw_mu_range_hi = 350.0;
  double bw_var_range_lo = 0.0, bw_var_range_hi = 100.0;
  double dirty_max_pages = 10000.0;
  DirtyRateMode dirty_rate_mode = DirtyRateMode::kPerSlot;
  // Synthetic ranges for the utilizations the trace would otherwise supply.
  double u_cpu_lo = 0.0, u_cpu_hi = 1.0;
  double u_mem_lo = 0.0, u_mem_hi = 1.0;
  double u_disk_lo = 0.0, u_disk_hi = 1.0;
};

// Per-run workload source. CPU/memory/disk utilizations come from the trace
// when one is attached, otherwise from the synthetic ranges; bandwidth
// utilization and the dirtying rate are always synthetic.
class WorkloadModel {
 public:
  WorkloadModel(const WorkloadParams& params, int num_avatars, Rng& setup_rng,
                std::optional<TraceTable> trace = std::nullopt);

  // Record for (avatar, slot). Draws from `rng` in a fixed order, so two
  // runs sampling the same (avatar, slot) sequence see identical workloads.
  AvatarWorkload sample(int avatar, int slot, Rng& rng) const;

  double bw_mu_mbps(int avatar) const {
    return mu_[static_cast<std::size_t>(avatar)];
  }
  double bw_sigma(int avatar) const {
    return sigma_[static_cast<std::size_t>(avatar)];
  }
  const AvatarSpec& avatar_spec() const { return params_.avatar; }

 private:
  WorkloadParams params_;
  std::vector<double> mu_;
  std::vector<double> sigma_;
  std::vector<double> fixed_dirty_;  // only for DirtyRateMode::kFixed
  std::optional<TraceTable> trace_;
};

}  // namespace cloudletsim
