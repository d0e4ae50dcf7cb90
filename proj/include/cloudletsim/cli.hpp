#pragma once

#include <string>
#include <vector>

#include "cloudletsim/engine.hpp"

namespace cloudletsim {

// Subcommand bodies behind the executable. Each writes its outputs under
// out_dir (created if missing) and throws on failure; the executable maps
// exception types to exit codes (config 1, usage/io 2, simulation 3).

// One run: per_slot.csv, summary.csv and config_effective.txt.
void cmd_run(const SimConfig& config, const std::string& out_dir);

// One run per (strategy, alpha): summary.csv, profit_diff.csv (when primal,
// far and static are all swept) and config_effective.txt.
void cmd_sweep(const SimConfig& config, const std::vector<Strategy>& strategies,
               const std::vector<double>& alphas, const std::string& out_dir);

// The strategies side by side at the config's alpha, on the shared
// realization: per_slot.csv, summary.csv and config_effective.txt.
void cmd_compare(const SimConfig& config,
                 const std::vector<Strategy>& strategies,
                 const std::string& out_dir);

// Print a pass/fail line per configuration check; returns 0 iff all pass.
int cmd_validate(const SimConfig& config);

}  // namespace cloudletsim
