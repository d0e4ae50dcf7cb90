#pragma once

#include <stdexcept>
#include <string>

namespace cloudletsim {

// Base class for everything this library throws on purpose.
struct SimError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Bad configuration: unparsable file, unknown key, out-of-range value,
// or a parameter set that can never simulate (capacity, divergence).
struct ConfigError : SimError {
  using SimError::SimError;
};

// Trace file problems (syntax or content), a subtype of config problems.
struct TraceError : ConfigError {
  using ConfigError::ConfigError;
};

// Sum of cloudlet capacities is smaller than the avatar population.
struct InsufficientCapacityError : SimError {
  using SimError::SimError;
};

// Pre-copy migration cannot terminate: dirtying rate >= migration bandwidth.
struct DivergentMigrationError : SimError {
  using SimError::SimError;
};

// Brute-force placement enumeration refused (instance beyond its guard).
struct InstanceTooLargeError : SimError {
  using SimError::SimError;
};

// Filesystem failures (unwritable output directory and friends).
struct IoError : SimError {
  using SimError::SimError;
};

}  // namespace cloudletsim
