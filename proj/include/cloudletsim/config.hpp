#pragma once

#include <string>

#include "cloudletsim/engine.hpp"

namespace cloudletsim {

// Config files are flat `key = value` lines. `#` starts a comment,
// `[section]` lines are decorative and ignored, keys are globally unique.
// Every key has a default; an empty file is a valid config.

SimConfig default_config();

SimConfig parse_config_text(const std::string& text, const std::string& name);
SimConfig load_config(const std::string& path);

// Apply one `key=value` override on top of an existing config.
void apply_override(SimConfig& config, const std::string& assignment);

// Flat echo of every resolved key. Loading this text back reproduces the
// config exactly, which makes any run reconstructible from its
// config_effective.txt.
std::string effective_config_text(const SimConfig& config);

}  // namespace cloudletsim
