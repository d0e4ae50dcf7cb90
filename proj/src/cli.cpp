#include "cloudletsim/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>

#include "cloudletsim/config.hpp"
#include "cloudletsim/csv.hpp"
#include "cloudletsim/errors.hpp"
#include "cloudletsim/workload.hpp"

namespace cloudletsim {

namespace {

namespace fs = std::filesystem;

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  out << content;
  if (!out.flush()) throw IoError("cannot write " + path.string());
}

fs::path prepare_out_dir(const std::string& out_dir) {
  const fs::path dir(out_dir);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw IoError("cannot create output directory " + out_dir);
  // Probe writability up front so a bad --out fails before simulating.
  const fs::path probe = dir / ".write_probe";
  {
    std::ofstream test(probe);
    if (!test) throw IoError("output directory " + out_dir + " is not writable");
  }
  fs::remove(probe, ec);
  return dir;
}

void require_valid_config(const SimConfig& config) {
  const std::vector<std::string> problems = validate_config(config);
  if (!problems.empty()) {
    std::string msg = "invalid config:";
    for (const std::string& p : problems) msg += "\n  - " + p;
    throw ConfigError(msg);
  }
}

void report_long_migrations(const MetricsReport& report) {
  if (report.aggregates.long_migration_warnings > 0) {
    std::cerr << "warning: " << report.aggregates.long_migration_warnings
              << " migrations took longer than one slot\n";
  }
}

}  // namespace

void cmd_run(const SimConfig& config, const std::string& out_dir) {
  require_valid_config(config);
  const fs::path dir = prepare_out_dir(out_dir);

  const MetricsReport report = run(config);
  report_long_migrations(report);

  std::vector<RunResult> results;
  results.push_back(RunResult{config.strategy, config.weights.alpha, report});
  write_file(dir / "per_slot.csv", per_slot_csv(results));
  write_file(dir / "summary.csv", summary_csv(results));
  write_file(dir / "config_effective.txt", effective_config_text(config));
}

void cmd_sweep(const SimConfig& config,
               const std::vector<Strategy>& strategies,
               const std::vector<double>& alphas, const std::string& out_dir) {
  require_valid_config(config);
  const fs::path dir = prepare_out_dir(out_dir);

  const std::vector<RunResult> results =
      run_matrix(config, strategies, alphas);
  for (const RunResult& r : results) report_long_migrations(r.report);

  write_file(dir / "summary.csv", summary_csv(results));

  const auto has = [&](Strategy s) {
    for (Strategy x : strategies)
      if (x == s) return true;
    return false;
  };
  if (has(Strategy::kPrimal) && has(Strategy::kFar) && has(Strategy::kStatic))
    write_file(dir / "profit_diff.csv", profit_diff_csv(results));

  SimConfig echoed = config;
  echoed.sweep_strategies = strategies;
  echoed.sweep_alphas = alphas;
  write_file(dir / "config_effective.txt", effective_config_text(echoed));
}

void cmd_compare(const SimConfig& config,
                 const std::vector<Strategy>& strategies,
                 const std::string& out_dir) {
  require_valid_config(config);
  const fs::path dir = prepare_out_dir(out_dir);

  const std::vector<RunResult> results =
      run_matrix(config, strategies, {config.weights.alpha});
  for (const RunResult& r : results) report_long_migrations(r.report);

  write_file(dir / "per_slot.csv", per_slot_csv(results));
  write_file(dir / "summary.csv", summary_csv(results));

  SimConfig echoed = config;
  echoed.sweep_strategies = strategies;
  write_file(dir / "config_effective.txt", effective_config_text(echoed));
}

int cmd_validate(const SimConfig& config) {
  const std::vector<std::string> problems = validate_config(config);
  std::vector<std::string> ranges, capacity, divergence;
  for (const std::string& p : problems) {
    if (p.rfind("insufficient_capacity", 0) == 0)
      capacity.push_back(p);
    else if (p.rfind("divergent_migration", 0) == 0)
      divergence.push_back(p);
    else
      ranges.push_back(p);
  }

  bool all_ok = true;
  const auto row = [&all_ok](const std::string& name,
                             const std::vector<std::string>& found) {
    if (found.empty()) {
      std::cout << "PASS  " << name << "\n";
    } else {
      all_ok = false;
      for (const std::string& p : found) std::cout << "FAIL  " << name << ": " << p << "\n";
    }
  };
  row("parameter ranges", ranges);
  row("capacity feasibility", capacity);
  row("migration divergence guard", divergence);

  if (config.use_trace) {
    std::vector<std::string> trace_problems;
    try {
      load_trace(config.trace_path);
    } catch (const SimError& e) {
      trace_problems.push_back(e.what());
    }
    row("trace file", trace_problems);
  }
  return all_ok ? 0 : 1;
}

}  // namespace cloudletsim
