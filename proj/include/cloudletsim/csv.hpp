#pragma once

#include <string>
#include <vector>

#include "cloudletsim/engine.hpp"

namespace cloudletsim {

// Shortest round-trip decimal form, locale-independent.
std::string format_double(double v);

// per_slot.csv: slot,strategy,alpha,total_gain_ms,total_cost,total_profit,
//               num_migrations,sum_migration_time_s,mean_rtt_ms
// Rows ordered by slot, then strategy name, then alpha.
std::string per_slot_csv(const std::vector<RunResult>& results);

// summary.csv: strategy,alpha,avg_profit_per_slot,avg_rtt_ms,
//              avg_migrations_per_slot,avg_migration_time_s
// Rows ordered by strategy name, then alpha.
std::string summary_csv(const std::vector<RunResult>& results);

// profit_diff.csv: alpha,primal_minus_far,primal_minus_static
// (average profit per slot differences; rows ordered by alpha).
std::string profit_diff_csv(const std::vector<RunResult>& results);

}  // namespace cloudletsim
