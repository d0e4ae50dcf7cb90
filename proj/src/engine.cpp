#include "cloudletsim/engine.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <thread>

#include "cloudletsim/errors.hpp"
#include "cloudletsim/mobility.hpp"
#include "cloudletsim/rng.hpp"

namespace cloudletsim {

std::string to_string(Strategy s) {
  switch (s) {
    case Strategy::kPrimal: return "primal";
    case Strategy::kFar: return "far";
    case Strategy::kStatic: return "static";
  }
  throw SimError("invalid strategy value");
}

Strategy strategy_from_string(const std::string& name) {
  if (name == "primal") return Strategy::kPrimal;
  if (name == "far") return Strategy::kFar;
  if (name == "static") return Strategy::kStatic;
  throw ConfigError("unknown strategy '" + name +
                    "' (expected primal, far or static)");
}

Topology SimConfig::build_topology() const {
  if (!explicit_sites.empty())
    return build_explicit_topology(explicit_sites, epsilon_ms_per_m);
  return build_grid_topology(grid_rows, grid_cols, cell_size_m,
                             epsilon_ms_per_m, cloudlet_capacity);
}

std::vector<std::string> validate_config(const SimConfig& c) {
  std::vector<std::string> problems;
  auto check = [&](bool ok, const std::string& msg) {
    if (!ok) problems.push_back(msg);
  };

  check(c.explicit_sites.empty() ? (c.grid_rows >= 1 && c.grid_cols >= 1)
                                 : true,
        "grid must be at least 1x1");
  check(c.cell_size_m > 0.0, "cell_size_m must be positive");
  check(c.epsilon_ms_per_m >= 0.0, "epsilon_ms_per_m must be >= 0");
  check(c.cloudlet_capacity >= 0, "cloudlet_capacity must be >= 0");
  check(c.num_ues >= 1, "num_ues must be >= 1");
  check(c.num_slots >= 1, "num_slots must be >= 1");
  check(c.warmup_slots >= 0 && c.warmup_slots < c.num_slots,
        "warmup_slots must be in [0, num_slots)");
  check(c.slot_seconds > 0.0, "slot_seconds must be positive");
  check(c.v_max_mps > 0.0, "v_max_mps must be positive");
  check(c.weights.alpha >= 0.0, "alpha must be >= 0");
  check(c.weights.w_net >= 0.0 && c.weights.w_mem >= 0.0 &&
            c.weights.w_disk >= 0.0 && c.weights.w_cpu >= 0.0,
        "impact weights must be >= 0");
  check(c.R_mbps > 0.0, "R_mbps must be positive");
  check(c.M_th_bits > 0.0, "M_th_bits must be positive");
  check(c.mem_gb > 0.0, "mem_gb must be positive");
  check(c.workload.avatar.bw_capacity_mbps > 0.0,
        "bw_capacity_mbps must be positive");
  check(c.workload.avatar.page_size_bits > 0.0,
        "page_size_bits must be positive");
  check(c.workload.dirty_max_pages >= 0.0, "dirty_max_pages must be >= 0");
  check(c.workload.bw_mu_range_lo >= 0.0 &&
            c.workload.bw_mu_range_lo <= c.workload.bw_mu_range_hi,
        "bw_mu_range must satisfy 0 <= lo <= hi");
  check(c.workload.bw_var_range_lo >= 0.0 &&
            c.workload.bw_var_range_lo <= c.workload.bw_var_range_hi,
        "bw_var_range must satisfy 0 <= lo <= hi");
  check(!c.use_trace || !c.trace_path.empty(),
        "workload_source = trace requires trace_path");
  for (const auto& [lo, hi, name] :
       {std::tuple{c.workload.u_cpu_lo, c.workload.u_cpu_hi, "u_cpu_range"},
        std::tuple{c.workload.u_mem_lo, c.workload.u_mem_hi, "u_mem_range"},
        std::tuple{c.workload.u_disk_lo, c.workload.u_disk_hi,
                   "u_disk_range"}}) {
    check(lo >= 0.0 && lo <= hi && hi <= 1.0,
          std::string(name) + " must satisfy 0 <= lo <= hi <= 1");
  }

  // Capacity feasibility.
  long long total_capacity = 0;
  if (c.explicit_sites.empty()) {
    total_capacity = static_cast<long long>(c.grid_rows) * c.grid_cols *
                     c.cloudlet_capacity;
  } else {
    for (const Site& s : c.explicit_sites) total_capacity += s.capacity;
  }
  check(c.num_ues <= total_capacity,
        "insufficient_capacity: " + std::to_string(c.num_ues) +
            " avatars exceed " + std::to_string(total_capacity) +
            " cloudlet slots");

  // Divergence guard: the fastest possible dirtying rate must stay below
  // the migration bandwidth or the round recursion cannot terminate.
  const double max_dirty_bits_per_s =
      dirty_rate_bits_per_s(c.workload.dirty_max_pages,
                            c.workload.avatar.page_size_bits, c.slot_seconds);
  check(c.migration_bw_bits_per_s() > max_dirty_bits_per_s,
        "divergent_migration risk: R = " +
            std::to_string(c.migration_bw_bits_per_s()) +
            " bits/s does not exceed the max dirtying rate " +
            std::to_string(max_dirty_bits_per_s) + " bits/s");

  return problems;
}

namespace {

void require_valid(const SimConfig& config) {
  const std::vector<std::string> problems = validate_config(config);
  if (!problems.empty()) {
    std::string msg = "invalid config:";
    for (const std::string& p : problems) msg += "\n  - " + p;
    throw ConfigError(msg);
  }
}

PlacementPlan make_plan(Strategy strategy, const PlacementInstance& instance) {
  switch (strategy) {
    case Strategy::kPrimal: return plan_primal(instance);
    case Strategy::kFar: return plan_far(instance);
    case Strategy::kStatic: return plan_static(instance);
  }
  throw SimError("invalid strategy value");
}

}  // namespace

MetricsReport run(const SimConfig& config, const SlotObserver& observer) {
  require_valid(config);
  const Topology topology = config.build_topology();

  // Separate streams per concern: the planner consumes no randomness, so
  // every strategy sees the identical mobility/workload realization.
  Rng mobility_rng = Rng::stream(config.seed, 1);
  Rng workload_rng = Rng::stream(config.seed, 2);

  const int num_avatars = config.num_ues;
  const MobilityConfig mobility{config.v_max_mps, config.slot_seconds};
  std::vector<UEState> ues;
  ues.reserve(static_cast<std::size_t>(num_avatars));
  for (int i = 0; i < num_avatars; ++i)
    ues.push_back(init_ue(mobility_rng, topology, mobility));

  Association assoc;
  assoc.ue_to_bs.resize(static_cast<std::size_t>(num_avatars));
  for (int i = 0; i < num_avatars; ++i)
    assoc[i] = associate(ues[static_cast<std::size_t>(i)].position, topology);

  WorkloadParams wl = config.workload;
  wl.avatar.mem_capacity_bits = config.mem_capacity_bits();
  std::optional<TraceTable> trace;
  if (config.use_trace) trace = load_trace(config.trace_path);
  const WorkloadModel model(wl, num_avatars, workload_rng, std::move(trace));

  Assignment placement = initial_placement(assoc, topology);

  const double R_bits = config.migration_bw_bits_per_s();
  MetricsReport report;
  report.per_slot.reserve(static_cast<std::size_t>(config.num_slots));

  std::vector<double> kappa_T(static_cast<std::size_t>(num_avatars));
  std::vector<double> mig_time(static_cast<std::size_t>(num_avatars));

  for (int t = 0; t < config.num_slots; ++t) {
    // (1) Move UEs through the slot and re-associate at slot end.
    for (int i = 0; i < num_avatars; ++i) {
      auto iu = static_cast<std::size_t>(i);
      ues[iu] = step_waypoint(ues[iu], mobility_rng, topology, mobility);
      assoc[i] = associate(ues[iu].position, topology);
    }

    // (2)+(3) Sample this slot's workloads and price each avatar's migration.
    for (int i = 0; i < num_avatars; ++i) {
      auto iu = static_cast<std::size_t>(i);
      const AvatarWorkload w = model.sample(i, t, workload_rng);
      MigrationParams mp;
      mp.M_bits = config.migration_memory == MigrationMemoryMode::kFull
                      ? wl.avatar.mem_capacity_bits
                      : w.u_mem * wl.avatar.mem_capacity_bits;
      mp.D_bits_per_s = dirty_rate_bits_per_s(
          w.dirty_rate_pages_per_slot, wl.avatar.page_size_bits,
          config.slot_seconds);
      mp.R_bits_per_s = R_bits;
      mp.M_th_bits = config.M_th_bits;
      const double T = migration_time(mp);
      if (T > config.slot_seconds) ++report.aggregates.long_migration_warnings;
      mig_time[iu] = T;
      kappa_T[iu] = cost_coefficient(w, config.weights) * T;
    }

    // (4) Plan and (5) score against x^t.
    const PlacementInstance instance =
        make_instance(topology, placement, assoc, kappa_T, mig_time);
    const PlacementPlan plan = make_plan(config.strategy, instance);

    SlotMetrics row;
    row.slot = t;
    for (const ProfitBreakdown& b : plan.breakdowns) {
      row.total_gain_ms += b.gain_ms;
      row.total_cost += b.cost;
      row.num_migrations += b.moved ? 1 : 0;
      row.sum_migration_time_s += b.migration_time_s;
    }
    row.total_profit = row.total_gain_ms - row.total_cost;

    // (6) Apply the plan and record end-of-slot RTT.
    placement = plan.next;
    double delay_sum = 0.0;
    for (int i = 0; i < num_avatars; ++i)
      delay_sum += core_delay(placement, assoc, topology, i);
    row.mean_rtt_ms = 2.0 * delay_sum / static_cast<double>(num_avatars);

    if (observer) observer(SlotView{t, instance, plan});
    report.per_slot.push_back(row);
  }

  // Aggregates over the post-warmup window.
  MetricsAggregates& agg = report.aggregates;
  double profit_sum = 0.0, rtt_sum = 0.0, time_sum = 0.0;
  long long mig_sum = 0;
  int counted = 0;
  for (const SlotMetrics& row : report.per_slot) {
    if (row.slot < config.warmup_slots) continue;
    ++counted;
    profit_sum += row.total_profit;
    rtt_sum += row.mean_rtt_ms;
    mig_sum += row.num_migrations;
    time_sum += row.sum_migration_time_s;
  }
  agg.avg_profit_per_slot = profit_sum / counted;
  agg.avg_rtt_ms = rtt_sum / counted;
  agg.avg_migrations_per_slot =
      static_cast<double>(mig_sum) / static_cast<double>(counted);
  agg.avg_migration_time_s =
      mig_sum > 0 ? time_sum / static_cast<double>(mig_sum) : 0.0;
  agg.total_migrations = mig_sum;
  return report;
}

std::vector<RunResult> run_matrix(const SimConfig& base,
                                  const std::vector<Strategy>& strategies,
                                  const std::vector<double>& alphas) {
  if (strategies.empty() || alphas.empty())
    throw ConfigError("run_matrix needs at least one strategy and one alpha");

  std::vector<SimConfig> configs;
  for (Strategy s : strategies) {
    for (double a : alphas) {
      SimConfig c = base;
      c.strategy = s;
      c.weights.alpha = a;
      configs.push_back(std::move(c));
    }
  }

  std::vector<std::future<MetricsReport>> futures;
  futures.reserve(configs.size());
  for (const SimConfig& c : configs)
    futures.push_back(
        std::async(std::launch::async, [&c]() { return run(c); }));

  std::vector<RunResult> results;
  results.reserve(configs.size());
  for (std::size_t idx = 0; idx < configs.size(); ++idx) {
    results.push_back(RunResult{configs[idx].strategy,
                                configs[idx].weights.alpha,
                                futures[idx].get()});
  }
  return results;
}

}  // namespace cloudletsim
