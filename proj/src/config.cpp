#include "cloudletsim/config.hpp"

#include <cstdint>
#include <fstream>
#include <functional>
#include <sstream>
#include <vector>

#include "cloudletsim/csv.hpp"
#include "cloudletsim/errors.hpp"

namespace cloudletsim {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::istringstream in(s);
  std::string part;
  while (std::getline(in, part, sep)) parts.push_back(trim(part));
  return parts;
}

long long parse_int(const std::string& key, const std::string& value) {
  try {
    std::size_t pos = 0;
    const long long v = std::stoll(value, &pos);
    if (pos != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw ConfigError(key + ": expected an integer, got '" + value + "'");
  }
}

std::uint64_t parse_u64(const std::string& key, const std::string& value) {
  try {
    std::size_t pos = 0;
    const std::uint64_t v = std::stoull(value, &pos);
    if (pos != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw ConfigError(key + ": expected an unsigned integer, got '" + value +
                      "'");
  }
}

double parse_double(const std::string& key, const std::string& value) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(value, &pos);
    if (pos != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw ConfigError(key + ": expected a number, got '" + value + "'");
  }
}

std::pair<double, double> parse_range(const std::string& key,
                                      const std::string& value) {
  const std::vector<std::string> parts = split(value, ',');
  if (parts.size() != 2)
    throw ConfigError(key + ": expected 'lo,hi', got '" + value + "'");
  return {parse_double(key, parts[0]), parse_double(key, parts[1])};
}

std::string range_text(double lo, double hi) {
  return format_double(lo) + "," + format_double(hi);
}

struct KeyEntry {
  std::string name;
  std::function<void(SimConfig&, const std::string&)> set;
  std::function<std::string(const SimConfig&)> get;
};

const std::vector<KeyEntry>& registry() {
  static const std::vector<KeyEntry> keys = [] {
    std::vector<KeyEntry> r;
    auto add = [&r](std::string name,
                    std::function<void(SimConfig&, const std::string&)> set,
                    std::function<std::string(const SimConfig&)> get) {
      r.push_back(KeyEntry{std::move(name), std::move(set), std::move(get)});
    };
    auto add_int = [&add](const std::string& name, int SimConfig::* field) {
      add(name,
          [name, field](SimConfig& c, const std::string& v) {
            c.*field = static_cast<int>(parse_int(name, v));
          },
          [field](const SimConfig& c) { return std::to_string(c.*field); });
    };
    auto add_double = [&add](const std::string& name,
                             double SimConfig::* field) {
      add(name,
          [name, field](SimConfig& c, const std::string& v) {
            c.*field = parse_double(name, v);
          },
          [field](const SimConfig& c) { return format_double(c.*field); });
    };
    auto add_wl_double = [&add](const std::string& name,
                                double WorkloadParams::* field) {
      add(name,
          [name, field](SimConfig& c, const std::string& v) {
            c.workload.*field = parse_double(name, v);
          },
          [field](const SimConfig& c) {
            return format_double(c.workload.*field);
          });
    };
    auto add_weight = [&add](const std::string& name,
                             double ImpactWeights::* field) {
      add(name,
          [name, field](SimConfig& c, const std::string& v) {
            c.weights.*field = parse_double(name, v);
          },
          [field](const SimConfig& c) { return format_double(c.weights.*field); });
    };

    // [topology]
    add_int("grid_rows", &SimConfig::grid_rows);
    add_int("grid_cols", &SimConfig::grid_cols);
    add_double("cell_size_m", &SimConfig::cell_size_m);
    add_double("epsilon_ms_per_m", &SimConfig::epsilon_ms_per_m);
    add_int("cloudlet_capacity", &SimConfig::cloudlet_capacity);
    add("sites",
        [](SimConfig& c, const std::string& v) {
          c.explicit_sites.clear();
          if (trim(v).empty()) return;
          for (const std::string& part : split(v, ';')) {
            const std::vector<std::string> f = split(part, ',');
            if (f.size() != 3)
              throw ConfigError("sites: expected 'x,y,capacity' triples");
            Site s;
            s.position.x_m = parse_double("sites", f[0]);
            s.position.y_m = parse_double("sites", f[1]);
            s.capacity = static_cast<int>(parse_int("sites", f[2]));
            c.explicit_sites.push_back(s);
          }
        },
        [](const SimConfig& c) {
          std::string out;
          for (const Site& s : c.explicit_sites) {
            if (!out.empty()) out += ";";
            out += format_double(s.position.x_m) + "," +
                   format_double(s.position.y_m) + "," +
                   std::to_string(s.capacity);
          }
          return out;
        });

    // [simulation]
    add_int("num_ues", &SimConfig::num_ues);
    add_int("num_slots", &SimConfig::num_slots);
    add_int("warmup_slots", &SimConfig::warmup_slots);
    add_double("slot_seconds", &SimConfig::slot_seconds);
    add("strategy",
        [](SimConfig& c, const std::string& v) {
          c.strategy = strategy_from_string(v);
        },
        [](const SimConfig& c) { return to_string(c.strategy); });
    add("seed",
        [](SimConfig& c, const std::string& v) {
          c.seed = parse_u64("seed", v);
        },
        [](const SimConfig& c) { return std::to_string(c.seed); });

    // [mobility]
    add_double("v_max_mps", &SimConfig::v_max_mps);

    // [migration]
    add_weight("alpha", &ImpactWeights::alpha);
    add_weight("w_net", &ImpactWeights::w_net);
    add_weight("w_mem", &ImpactWeights::w_mem);
    add_weight("w_disk", &ImpactWeights::w_disk);
    add_weight("w_cpu", &ImpactWeights::w_cpu);
    add_double("R_mbps", &SimConfig::R_mbps);
    add_double("M_th_bits", &SimConfig::M_th_bits);
    add("migration_memory",
        [](SimConfig& c, const std::string& v) {
          if (v == "used")
            c.migration_memory = MigrationMemoryMode::kUsed;
          else if (v == "full")
            c.migration_memory = MigrationMemoryMode::kFull;
          else
            throw ConfigError("migration_memory: expected used or full");
        },
        [](const SimConfig& c) {
          return c.migration_memory == MigrationMemoryMode::kUsed ? "used"
                                                                  : "full";
        });

    // [avatar]
    add_double("mem_gb", &SimConfig::mem_gb);
    add("gb_interpretation",
        [](SimConfig& c, const std::string& v) {
          if (v == "binary")
            c.gb_decimal = false;
          else if (v == "decimal")
            c.gb_decimal = true;
          else
            throw ConfigError("gb_interpretation: expected binary or decimal");
        },
        [](const SimConfig& c) { return c.gb_decimal ? "decimal" : "binary"; });
    add("bw_capacity_mbps",
        [](SimConfig& c, const std::string& v) {
          c.workload.avatar.bw_capacity_mbps =
              parse_double("bw_capacity_mbps", v);
        },
        [](const SimConfig& c) {
          return format_double(c.workload.avatar.bw_capacity_mbps);
        });
    add("page_size_bits",
        [](SimConfig& c, const std::string& v) {
          c.workload.avatar.page_size_bits = parse_double("page_size_bits", v);
        },
        [](const SimConfig& c) {
          return format_double(c.workload.avatar.page_size_bits);
        });

    // [workload]
    add("workload_source",
        [](SimConfig& c, const std::string& v) {
          if (v == "synthetic")
            c.use_trace = false;
          else if (v == "trace")
            c.use_trace = true;
          else
            throw ConfigError("workload_source: expected synthetic or trace");
        },
        [](const SimConfig& c) { return c.use_trace ? "trace" : "synthetic"; });
    add("trace_path",
        [](SimConfig& c, const std::string& v) { c.trace_path = v; },
        [](const SimConfig& c) { return c.trace_path; });
    add("bw_mu_range",
        [](SimConfig& c, const std::string& v) {
          std::tie(c.workload.bw_mu_range_lo, c.workload.bw_mu_range_hi) =
              parse_range("bw_mu_range", v);
        },
        [](const SimConfig& c) {
          return range_text(c.workload.bw_mu_range_lo,
                            c.workload.bw_mu_range_hi);
        });
    add("bw_var_range",
        [](SimConfig& c, const std::string& v) {
          std::tie(c.workload.bw_var_range_lo, c.workload.bw_var_range_hi) =
              parse_range("bw_var_range", v);
        },
        [](const SimConfig& c) {
          return range_text(c.workload.bw_var_range_lo,
                            c.workload.bw_var_range_hi);
        });
    add_wl_double("dirty_max_pages", &WorkloadParams::dirty_max_pages);
    add("dirty_rate_mode",
        [](SimConfig& c, const std::string& v) {
          if (v == "per_slot")
            c.workload.dirty_rate_mode = DirtyRateMode::kPerSlot;
          else if (v == "fixed")
            c.workload.dirty_rate_mode = DirtyRateMode::kFixed;
          else
            throw ConfigError("dirty_rate_mode: expected per_slot or fixed");
        },
        [](const SimConfig& c) {
          return c.workload.dirty_rate_mode == DirtyRateMode::kPerSlot
                     ? "per_slot"
                     : "fixed";
        });
    add("u_cpu_range",
        [](SimConfig& c, const std::string& v) {
          std::tie(c.workload.u_cpu_lo, c.workload.u_cpu_hi) =
              parse_range("u_cpu_range", v);
        },
        [](const SimConfig& c) {
          return range_text(c.workload.u_cpu_lo, c.workload.u_cpu_hi);
        });
    add("u_mem_range",
        [](SimConfig& c, const std::string& v) {
          std::tie(c.workload.u_mem_lo, c.workload.u_mem_hi) =
              parse_range("u_mem_range", v);
        },
        [](const SimConfig& c) {
          return range_text(c.workload.u_mem_lo, c.workload.u_mem_hi);
        });
    add("u_disk_range",
        [](SimConfig& c, const std::string& v) {
          std::tie(c.workload.u_disk_lo, c.workload.u_disk_hi) =
              parse_range("u_disk_range", v);
        },
        [](const SimConfig& c) {
          return range_text(c.workload.u_disk_lo, c.workload.u_disk_hi);
        });

    // [sweep]
    add("sweep_alphas",
        [](SimConfig& c, const std::string& v) {
          c.sweep_alphas.clear();
          for (const std::string& part : split(v, ','))
            if (!part.empty())
              c.sweep_alphas.push_back(parse_double("sweep_alphas", part));
        },
        [](const SimConfig& c) {
          std::string out;
          for (double a : c.sweep_alphas) {
            if (!out.empty()) out += ",";
            out += format_double(a);
          }
          return out;
        });
    add("sweep_strategies",
        [](SimConfig& c, const std::string& v) {
          c.sweep_strategies.clear();
          for (const std::string& part : split(v, ','))
            if (!part.empty())
              c.sweep_strategies.push_back(strategy_from_string(part));
        },
        [](const SimConfig& c) {
          std::string out;
          for (Strategy s : c.sweep_strategies) {
            if (!out.empty()) out += ",";
            out += to_string(s);
          }
          return out;
        });
    return r;
  }();
  return keys;
}

const KeyEntry* find_key(const std::string& name) {
  for (const KeyEntry& k : registry())
    if (k.name == name) return &k;
  return nullptr;
}

}  // namespace

SimConfig default_config() { return SimConfig{}; }

SimConfig parse_config_text(const std::string& text, const std::string& name) {
  SimConfig config;
  std::istringstream in(text);
  std::string line;
  long line_no = 0;
  std::vector<std::string> seen;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']')
        throw ConfigError(name + ":" + std::to_string(line_no) +
                          ": malformed section header");
      continue;  // sections only organize the file
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError(name + ":" + std::to_string(line_no) +
                        ": expected 'key = value'");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    const KeyEntry* entry = find_key(key);
    if (!entry)
      throw ConfigError(name + ":" + std::to_string(line_no) +
                        ": unknown key '" + key + "'");
    for (const std::string& s : seen)
      if (s == key)
        throw ConfigError(name + ":" + std::to_string(line_no) +
                          ": duplicate key '" + key + "'");
    seen.push_back(key);
    try {
      entry->set(config, value);
    } catch (const ConfigError& e) {
      throw ConfigError(name + ":" + std::to_string(line_no) + ": " +
                        e.what());
    }
  }
  return config;
}

SimConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config_text(text.str(), path);
}

void apply_override(SimConfig& config, const std::string& assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string::npos)
    throw ConfigError("override '" + assignment + "' is not key=value");
  const std::string key = trim(assignment.substr(0, eq));
  const std::string value = trim(assignment.substr(eq + 1));
  const KeyEntry* entry = find_key(key);
  if (!entry) throw ConfigError("unknown config key '" + key + "'");
  entry->set(config, value);
}

std::string effective_config_text(const SimConfig& config) {
  std::string out;
  for (const KeyEntry& k : registry())
    out += k.name + " = " + k.get(config) + "\n";
  return out;
}

}  // namespace cloudletsim
