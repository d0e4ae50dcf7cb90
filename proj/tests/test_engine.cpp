#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>

#include "cloudletsim/csv.hpp"
#include "cloudletsim/engine.hpp"
#include "cloudletsim/errors.hpp"

using namespace cloudletsim;

namespace {

// Desk-scale config that still exercises contention.
SimConfig small_config() {
  SimConfig c;
  c.grid_rows = 3;
  c.grid_cols = 3;
  c.cell_size_m = 2000.0;
  c.cloudlet_capacity = 8;
  c.num_ues = 50;
  c.num_slots = 30;
  c.seed = 1234;
  return c;
}

}  // namespace

TEST_CASE("static strategy never migrates and never profits") {
  SimConfig c = small_config();
  c.strategy = Strategy::kStatic;
  const MetricsReport r = run(c);
  REQUIRE(r.per_slot.size() == 30);
  for (const SlotMetrics& row : r.per_slot) {
    CHECK(row.num_migrations == 0);
    CHECK(row.total_profit == 0.0);
    CHECK(row.total_cost == 0.0);
    CHECK(row.sum_migration_time_s == 0.0);
  }
  CHECK(r.aggregates.avg_migrations_per_slot == 0.0);
  CHECK(r.aggregates.avg_migration_time_s == 0.0);
}

TEST_CASE("an astronomical alpha freezes primal entirely") {
  SimConfig c = small_config();
  c.strategy = Strategy::kPrimal;
  c.weights.alpha = 1e9;
  const MetricsReport r = run(c);
  for (const SlotMetrics& row : r.per_slot) CHECK(row.num_migrations == 0);
}

TEST_CASE("identical config and seed give byte-identical CSV output") {
  SimConfig c = small_config();
  const MetricsReport a = run(c);
  const MetricsReport b = run(c);
  const std::vector<RunResult> ra{{c.strategy, c.weights.alpha, a}};
  const std::vector<RunResult> rb{{c.strategy, c.weights.alpha, b}};
  CHECK(per_slot_csv(ra) == per_slot_csv(rb));
  CHECK(summary_csv(ra) == summary_csv(rb));
}

TEST_CASE("per-slot conservation and plan consistency") {
  SimConfig c = small_config();
  std::vector<double> plan_profits;
  const MetricsReport r = run(c, [&](const SlotView& view) {
    plan_profits.push_back(view.plan.total_profit);
    // every breakdown satisfies profit = gain - cost exactly
    for (const ProfitBreakdown& b : view.plan.breakdowns)
      CHECK(b.profit == b.gain_ms - b.cost);
  });
  REQUIRE(plan_profits.size() == r.per_slot.size());
  for (std::size_t t = 0; t < r.per_slot.size(); ++t) {
    const SlotMetrics& row = r.per_slot[t];
    CHECK(row.total_profit == row.total_gain_ms - row.total_cost);
    CHECK(row.total_profit ==
          doctest::Approx(plan_profits[t]).epsilon(1e-9));
  }
}

TEST_CASE("plans respect capacity in every slot") {
  SimConfig c = small_config();
  c.num_ues = 70;  // close to the 72-slot total capacity
  run(c, [&](const SlotView& view) {
    CHECK(capacity_feasible(view.plan.next, *view.instance.topology));
    const std::vector<int> occ =
        occupancy(view.plan.next, view.instance.num_cloudlets());
    for (std::size_t j = 0; j < occ.size(); ++j)
      CHECK(occ[j] <= view.instance.capacities[j]);
  });
}

TEST_CASE("primal dominates the shadow far plan and zero, per slot") {
  SimConfig c = small_config();
  c.strategy = Strategy::kPrimal;
  run(c, [&](const SlotView& view) {
    const PlacementPlan shadow = plan_far(view.instance);
    CHECK(view.plan.total_profit >= shadow.total_profit);
    CHECK(view.plan.total_profit >= 0.0);
  });
}

TEST_CASE("mean RTT is twice the mean core delay at slot end") {
  SimConfig c = small_config();
  c.num_slots = 5;
  std::vector<double> recomputed;
  const MetricsReport r = run(c, [&](const SlotView& view) {
    double sum = 0.0;
    for (int i = 0; i < view.instance.num_avatars(); ++i)
      sum += core_delay(view.plan.next, view.instance.next_association,
                        *view.instance.topology, i);
    recomputed.push_back(2.0 * sum / view.instance.num_avatars());
  });
  for (std::size_t t = 0; t < r.per_slot.size(); ++t)
    CHECK(r.per_slot[t].mean_rtt_ms ==
          doctest::Approx(recomputed[t]).epsilon(1e-12));
}

TEST_CASE("run_matrix shares the realization across strategies") {
  SimConfig c = small_config();
  const std::vector<RunResult> results = run_matrix(
      c, {Strategy::kPrimal, Strategy::kFar, Strategy::kStatic}, {0.0, 5.0});
  REQUIRE(results.size() == 6);
  // far ignores alpha for its decisions, so its RTT trace is identical
  const RunResult* far0 = nullptr;
  const RunResult* far5 = nullptr;
  for (const RunResult& r : results) {
    if (r.strategy == Strategy::kFar && r.alpha == 0.0) far0 = &r;
    if (r.strategy == Strategy::kFar && r.alpha == 5.0) far5 = &r;
  }
  REQUIRE(far0 != nullptr);
  REQUIRE(far5 != nullptr);
  for (std::size_t t = 0; t < far0->report.per_slot.size(); ++t)
    CHECK(far0->report.per_slot[t].mean_rtt_ms ==
          far5->report.per_slot[t].mean_rtt_ms);
}

TEST_CASE("a single-pair matrix reproduces run()") {
  SimConfig c = small_config();
  c.strategy = Strategy::kFar;
  c.weights.alpha = 3.0;
  const MetricsReport direct = run(c);
  const std::vector<RunResult> matrix =
      run_matrix(c, {Strategy::kFar}, {3.0});
  REQUIRE(matrix.size() == 1);
  CHECK(matrix[0].report.aggregates.avg_profit_per_slot ==
        direct.aggregates.avg_profit_per_slot);
  CHECK(matrix[0].report.aggregates.avg_rtt_ms == direct.aggregates.avg_rtt_ms);
  CHECK(matrix[0].report.per_slot.size() == direct.per_slot.size());
}

TEST_CASE("matrix rejects empty lists") {
  const SimConfig c = small_config();
  CHECK_THROWS_AS(run_matrix(c, {}, {1.0}), ConfigError);
  CHECK_THROWS_AS(run_matrix(c, {Strategy::kPrimal}, {}), ConfigError);
}

TEST_CASE("long-run RTT ordering: adaptive strategies beat static") {
  SimConfig c = small_config();
  c.num_slots = 60;
  const std::vector<RunResult> results = run_matrix(
      c, {Strategy::kPrimal, Strategy::kFar, Strategy::kStatic}, {2.0});
  double rtt_primal = 0, rtt_far = 0, rtt_static = 0;
  for (const RunResult& r : results) {
    if (r.strategy == Strategy::kPrimal) rtt_primal = r.report.aggregates.avg_rtt_ms;
    if (r.strategy == Strategy::kFar) rtt_far = r.report.aggregates.avg_rtt_ms;
    if (r.strategy == Strategy::kStatic) rtt_static = r.report.aggregates.avg_rtt_ms;
  }
  CHECK(rtt_far < rtt_static);
  CHECK(rtt_primal < rtt_static);
}

TEST_CASE("alpha extremes bracket the migration counts") {
  SimConfig c = small_config();
  const std::vector<RunResult> results =
      run_matrix(c, {Strategy::kPrimal}, {0.0, 1e9});
  REQUIRE(results.size() == 2);
  CHECK(results[0].report.aggregates.avg_migrations_per_slot >=
        results[1].report.aggregates.avg_migrations_per_slot);
  CHECK(results[1].report.aggregates.total_migrations == 0);
}

TEST_CASE("warmup slots are excluded from aggregates only") {
  SimConfig c = small_config();
  c.warmup_slots = 10;
  const MetricsReport r = run(c);
  CHECK(r.per_slot.size() == 30);  // rows still cover every slot
  double rtt_sum = 0.0;
  for (const SlotMetrics& row : r.per_slot)
    if (row.slot >= 10) rtt_sum += row.mean_rtt_ms;
  CHECK(r.aggregates.avg_rtt_ms == doctest::Approx(rtt_sum / 20).epsilon(1e-12));
}

TEST_CASE("aggregates are the documented functions of the per-slot rows") {
  SimConfig c = small_config();
  c.strategy = Strategy::kFar;  // plenty of migrations
  const MetricsReport r = run(c);
  double profit = 0, rtt = 0, time_sum = 0;
  long long migs = 0;
  for (const SlotMetrics& row : r.per_slot) {
    profit += row.total_profit;
    rtt += row.mean_rtt_ms;
    migs += row.num_migrations;
    time_sum += row.sum_migration_time_s;
  }
  const double n = static_cast<double>(r.per_slot.size());
  CHECK(r.aggregates.avg_profit_per_slot == doctest::Approx(profit / n));
  CHECK(r.aggregates.avg_rtt_ms == doctest::Approx(rtt / n));
  CHECK(r.aggregates.avg_migrations_per_slot ==
        doctest::Approx(static_cast<double>(migs) / n));
  CHECK(r.aggregates.total_migrations == migs);
  REQUIRE(migs > 0);
  CHECK(r.aggregates.avg_migration_time_s ==
        doctest::Approx(time_sum / static_cast<double>(migs)));
}

TEST_CASE("migrations longer than a slot are counted but still applied") {
  SimConfig c = small_config();
  c.strategy = Strategy::kFar;
  c.migration_memory = MigrationMemoryMode::kFull;  // T >= 160 s
  c.slot_seconds = 100.0;
  const MetricsReport r = run(c);
  CHECK(r.aggregates.total_migrations > 0);
  CHECK(r.aggregates.long_migration_warnings >= r.aggregates.total_migrations);
  CHECK(r.aggregates.avg_migration_time_s > c.slot_seconds);
}

TEST_CASE("trace-driven runs work end to end and honor the trace") {
  namespace fs = std::filesystem;
  const fs::path path = fs::temp_directory_path() / "cloudletsim_engine_trace.csv";
  {
    std::ofstream out(path);
    out << "avatar_id,slot,u_cpu,u_mem,u_disk\n";
    // two avatars, three slots each, all-zero memory: every migration is free
    for (int a = 0; a < 2; ++a)
      for (int s = 0; s < 3; ++s)
        out << a << "," << s << ",0.3,0.0,0.2\n";
  }
  SimConfig c = small_config();
  c.use_trace = true;
  c.trace_path = path.string();
  const MetricsReport traced = run(c);
  // u_mem = 0 everywhere makes M = 0, so migration costs vanish and primal
  // behaves like pure delay minimization.
  SimConfig zero_alpha = small_config();
  zero_alpha.weights.alpha = 0.0;
  const MetricsReport free_mig = run(zero_alpha);
  CHECK(traced.aggregates.avg_rtt_ms ==
        doctest::Approx(free_mig.aggregates.avg_rtt_ms).epsilon(1e-12));
  CHECK(traced.aggregates.avg_migration_time_s == 0.0);

  // identical trace, identical report
  const MetricsReport again = run(c);
  CHECK(again.aggregates.avg_profit_per_slot ==
        traced.aggregates.avg_profit_per_slot);
  fs::remove(path);

  c.trace_path = "/nonexistent/nope.csv";
  CHECK_THROWS_AS(run(c), TraceError);
}

TEST_CASE("divergent configurations are rejected up front") {
  SimConfig c = small_config();
  c.R_mbps = 0.5;  // below the max dirtying rate of ~1.09 Mbps
  CHECK_FALSE(validate_config(c).empty());
  CHECK_THROWS_AS(run(c), ConfigError);
}

TEST_CASE("capacity-infeasible configurations are rejected up front") {
  SimConfig c = small_config();
  c.num_ues = 73;  // 9 cloudlets x 8 slots = 72
  CHECK_FALSE(validate_config(c).empty());
  CHECK_THROWS_AS(run(c), ConfigError);
}
