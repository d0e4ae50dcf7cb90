#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "cloudletsim/migration.hpp"
#include "cloudletsim/placement.hpp"
#include "cloudletsim/topology.hpp"
#include "cloudletsim/workload.hpp"

namespace cloudletsim {

enum class Strategy { kPrimal, kFar, kStatic };

std::string to_string(Strategy s);
Strategy strategy_from_string(const std::string& name);

struct SimConfig {
  // Topology: a rows x cols grid of co-located BS/cloudlet sites, or an
  // explicit site list when non-empty.
  int grid_rows = 5;
  int grid_cols = 5;
  double cell_size_m = 2000.0;
  double epsilon_ms_per_m = 0.001;
  int cloudlet_capacity = 50;
  std::vector<Site> explicit_sites;

  // Population and time base.
  int num_ues = 1000;
  int num_slots = 288;
  int warmup_slots = 0;  // slots excluded from the aggregate metrics
  double slot_seconds = 300.0;

  // Mobility.
  double v_max_mps = 10.0;

  // Placement strategy and cost weights.
  Strategy strategy = Strategy::kPrimal;
  ImpactWeights weights;  // w_net/w_mem/w_disk/w_cpu and alpha

  // Migration bandwidth and stop-and-copy threshold.
  double R_mbps = 200.0;
  double M_th_bits = 32768000.0;  // 1000 pages of 32k bits
  MigrationMemoryMode migration_memory = MigrationMemoryMode::kUsed;

  // Avatar hardware. "GB" is interpreted as GiB unless gb_decimal is set.
  double mem_gb = 4.0;
  bool gb_decimal = false;

  // Workload synthesis / trace.
  WorkloadParams workload;
  bool use_trace = false;
  std::string trace_path;

  std::uint64_t seed = 42;

  // Sweep defaults, used by the sweep/compare commands when the command
  // line does not override them.
  std::vector<double> sweep_alphas = {0.0, 2.0, 5.0, 10.0, 20.0};
  std::vector<Strategy> sweep_strategies = {Strategy::kPrimal, Strategy::kFar,
                                            Strategy::kStatic};

  double mem_capacity_bits() const {
    const double bytes_per_gb = gb_decimal ? 1e9 : 1024.0 * 1024.0 * 1024.0;
    return mem_gb * bytes_per_gb * 8.0;
  }
  double migration_bw_bits_per_s() const { return R_mbps * 1e6; }

  Topology build_topology() const;
};

// Configuration problems, one message per violated constraint; empty means
// the config can run.
std::vector<std::string> validate_config(const SimConfig& config);

struct SlotMetrics {
  int slot = 0;
  double total_gain_ms = 0.0;
  double total_cost = 0.0;
  double total_profit = 0.0;  // total_gain_ms - total_cost, exactly
  long long num_migrations = 0;
  double sum_migration_time_s = 0.0;
  double mean_rtt_ms = 0.0;  // 2 x mean one-way core delay at slot end
};

struct MetricsAggregates {
  double avg_profit_per_slot = 0.0;
  double avg_rtt_ms = 0.0;
  double avg_migrations_per_slot = 0.0;
  double avg_migration_time_s = 0.0;  // per migration; 0 when none happened
  long long total_migrations = 0;
  long long long_migration_warnings = 0;  // migrations longer than a slot
};

struct MetricsReport {
  std::vector<SlotMetrics> per_slot;
  MetricsAggregates aggregates;
};

// Per-slot view handed to an observer: the decision instance and the chosen
// plan, before the plan is applied. Used by tests for shadow comparisons.
struct SlotView {
  int slot;
  const PlacementInstance& instance;
  const PlacementPlan& plan;
};
using SlotObserver = std::function<void(const SlotView&)>;

// One time-slotted simulation: move UEs, sample workloads, price migrations,
// plan, score, apply. Deterministic for a fixed (config, seed).
MetricsReport run(const SimConfig& config, const SlotObserver& observer = {});

struct RunResult {
  Strategy strategy;
  double alpha;
  MetricsReport report;
};

// One run per (strategy, alpha) pair over the same mobility and workload
// realization, so differences isolate the placement policy.
std::vector<RunResult> run_matrix(const SimConfig& base,
                                  const std::vector<Strategy>& strategies,
                                  const std::vector<double>& alphas);

}  // namespace cloudletsim
