#include "cloudletsim/csv.hpp"

#include <algorithm>
#include <charconv>

#include "cloudletsim/errors.hpp"

namespace cloudletsim {

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

namespace {

// Stable output order: strategy name, then alpha.
std::vector<const RunResult*> sorted_results(
    const std::vector<RunResult>& results) {
  std::vector<const RunResult*> sorted;
  sorted.reserve(results.size());
  for (const RunResult& r : results) sorted.push_back(&r);
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const RunResult* a, const RunResult* b) {
                     const std::string an = to_string(a->strategy);
                     const std::string bn = to_string(b->strategy);
                     if (an != bn) return an < bn;
                     return a->alpha < b->alpha;
                   });
  return sorted;
}

const RunResult* find_result(const std::vector<RunResult>& results,
                             Strategy strategy, double alpha) {
  for (const RunResult& r : results)
    if (r.strategy == strategy && r.alpha == alpha) return &r;
  return nullptr;
}

}  // namespace

std::string per_slot_csv(const std::vector<RunResult>& results) {
  std::string out =
      "slot,strategy,alpha,total_gain_ms,total_cost,total_profit,"
      "num_migrations,sum_migration_time_s,mean_rtt_ms\n";
  const std::vector<const RunResult*> sorted = sorted_results(results);
  std::size_t max_slots = 0;
  for (const RunResult* r : sorted)
    max_slots = std::max(max_slots, r->report.per_slot.size());
  for (std::size_t t = 0; t < max_slots; ++t) {
    for (const RunResult* r : sorted) {
      if (t >= r->report.per_slot.size()) continue;
      const SlotMetrics& row = r->report.per_slot[t];
      out += std::to_string(row.slot);
      out += ',';
      out += to_string(r->strategy);
      out += ',';
      out += format_double(r->alpha);
      out += ',';
      out += format_double(row.total_gain_ms);
      out += ',';
      out += format_double(row.total_cost);
      out += ',';
      out += format_double(row.total_profit);
      out += ',';
      out += std::to_string(row.num_migrations);
      out += ',';
      out += format_double(row.sum_migration_time_s);
      out += ',';
      out += format_double(row.mean_rtt_ms);
      out += '\n';
    }
  }
  return out;
}

std::string summary_csv(const std::vector<RunResult>& results) {
  std::string out =
      "strategy,alpha,avg_profit_per_slot,avg_rtt_ms,avg_migrations_per_slot,"
      "avg_migration_time_s\n";
  for (const RunResult* r : sorted_results(results)) {
    const MetricsAggregates& a = r->report.aggregates;
    out += to_string(r->strategy);
    out += ',';
    out += format_double(r->alpha);
    out += ',';
    out += format_double(a.avg_profit_per_slot);
    out += ',';
    out += format_double(a.avg_rtt_ms);
    out += ',';
    out += format_double(a.avg_migrations_per_slot);
    out += ',';
    out += format_double(a.avg_migration_time_s);
    out += '\n';
  }
  return out;
}

std::string profit_diff_csv(const std::vector<RunResult>& results) {
  std::vector<double> alphas;
  for (const RunResult& r : results)
    if (r.strategy == Strategy::kPrimal) alphas.push_back(r.alpha);
  std::sort(alphas.begin(), alphas.end());
  alphas.erase(std::unique(alphas.begin(), alphas.end()), alphas.end());

  std::string out = "alpha,primal_minus_far,primal_minus_static\n";
  for (double alpha : alphas) {
    const RunResult* primal = find_result(results, Strategy::kPrimal, alpha);
    const RunResult* far = find_result(results, Strategy::kFar, alpha);
    const RunResult* stat = find_result(results, Strategy::kStatic, alpha);
    if (!primal || !far || !stat) continue;
    out += format_double(alpha);
    out += ',';
    out += format_double(primal->report.aggregates.avg_profit_per_slot -
                         far->report.aggregates.avg_profit_per_slot);
    out += ',';
    out += format_double(primal->report.aggregates.avg_profit_per_slot -
                         stat->report.aggregates.avg_profit_per_slot);
    out += '\n';
  }
  return out;
}

}  // namespace cloudletsim
