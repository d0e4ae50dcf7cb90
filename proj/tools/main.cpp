// Command-line front end: run | sweep | compare | validate.

#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cloudletsim/cli.hpp"
#include "cloudletsim/config.hpp"
#include "cloudletsim/errors.hpp"

namespace {

using cloudletsim::SimConfig;
using cloudletsim::Strategy;

struct CommonArgs {
  std::string config_path;
  std::vector<std::string> overrides;
  std::string out_dir = "out";
  std::uint64_t seed = 0;
  bool seed_set = false;
  std::string alphas_arg;
  bool alphas_set = false;
  std::string strategies_arg;
  bool strategies_set = false;
};

void add_common_options(CLI::App* sub, CommonArgs& args, bool with_out) {
  sub->add_option("--config", args.config_path, "config file (key = value)");
  sub->add_option("--override", args.overrides,
                  "config overrides as key=value, repeatable")
      ->expected(-1);
  sub->add_option("--seed", args.seed, "override the RNG seed")
      ->each([&args](const std::string&) { args.seed_set = true; });
  if (with_out)
    sub->add_option("--out", args.out_dir, "output directory (default: out)");
}

SimConfig build_config(const CommonArgs& args) {
  SimConfig config = args.config_path.empty()
                         ? cloudletsim::default_config()
                         : cloudletsim::load_config(args.config_path);
  for (const std::string& o : args.overrides)
    cloudletsim::apply_override(config, o);
  if (args.seed_set) config.seed = args.seed;
  return config;
}

std::vector<double> resolve_alphas(const CommonArgs& args,
                                   const SimConfig& config) {
  if (!args.alphas_set) return config.sweep_alphas;
  std::vector<double> alphas;
  std::string part;
  std::istringstream in(args.alphas_arg);
  while (std::getline(in, part, ',')) {
    if (part.empty()) continue;
    alphas.push_back(std::stod(part));
  }
  return alphas;
}

std::vector<Strategy> resolve_strategies(const CommonArgs& args,
                                         const SimConfig& config) {
  if (!args.strategies_set) return config.sweep_strategies;
  std::vector<Strategy> strategies;
  std::string part;
  std::istringstream in(args.strategies_arg);
  while (std::getline(in, part, ',')) {
    if (part.empty()) continue;
    strategies.push_back(cloudletsim::strategy_from_string(part));
  }
  return strategies;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"time-slotted cloudlet network simulator with avatar live "
               "migration and profit-maximizing placement"};
  app.require_subcommand(1);

  CommonArgs args;
  CLI::App* cmd_run = app.add_subcommand("run", "simulate one configuration");
  add_common_options(cmd_run, args, true);

  CLI::App* cmd_sweep = app.add_subcommand(
      "sweep", "run a (strategy, alpha) matrix on a shared realization");
  add_common_options(cmd_sweep, args, true);
  cmd_sweep->add_option("--alphas", args.alphas_arg, "comma-separated alphas")
      ->each([&args](const std::string&) { args.alphas_set = true; });
  cmd_sweep
      ->add_option("--strategies", args.strategies_arg,
                   "comma-separated strategies")
      ->each([&args](const std::string&) { args.strategies_set = true; });

  CLI::App* cmd_compare = app.add_subcommand(
      "compare", "run the strategies side by side at the config's alpha");
  add_common_options(cmd_compare, args, true);
  cmd_compare
      ->add_option("--strategies", args.strategies_arg,
                   "comma-separated strategies")
      ->each([&args](const std::string&) { args.strategies_set = true; });

  CLI::App* cmd_validate =
      app.add_subcommand("validate", "check the configuration and exit");
  add_common_options(cmd_validate, args, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    const SimConfig config = build_config(args);
    if (cmd_run->parsed()) {
      cloudletsim::cmd_run(config, args.out_dir);
    } else if (cmd_sweep->parsed()) {
      const std::vector<double> alphas = resolve_alphas(args, config);
      const std::vector<Strategy> strategies = resolve_strategies(args, config);
      if (alphas.empty() || strategies.empty()) {
        std::cerr << "error: sweep needs a non-empty alpha and strategy list\n";
        return 2;
      }
      cloudletsim::cmd_sweep(config, strategies, alphas, args.out_dir);
    } else if (cmd_compare->parsed()) {
      const std::vector<Strategy> strategies = resolve_strategies(args, config);
      if (strategies.empty()) {
        std::cerr << "error: compare needs a non-empty strategy list\n";
        return 2;
      }
      cloudletsim::cmd_compare(config, strategies, args.out_dir);
    } else if (cmd_validate->parsed()) {
      return cloudletsim::cmd_validate(config);
    }
  } catch (const cloudletsim::ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const cloudletsim::IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
