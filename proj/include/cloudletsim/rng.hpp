#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace cloudletsim {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Deterministic random stream. Distribution mappings are implemented
// explicitly (not via std:: distributions) so that sequences are identical
// across standard libraries, which keeps CSV outputs byte-reproducible.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(splitmix64(seed)) {}

  // Derive an independent stream; used to give mobility/workload their own
  // streams so strategy choice cannot perturb the shared realization.
  static Rng stream(std::uint64_t seed, std::uint64_t stream_id) {
    return Rng(splitmix64(seed ^ splitmix64(stream_id + 0x51ed2701a9b5d9ULL)));
  }

  std::uint64_t next_u64() { return gen_(); }

  // Uniform in [0, 1), 53-bit resolution.
  double uniform01() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  // Uniform in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  // Uniform in (0, hi]; never returns 0.
  double uniform_positive(double hi) { return hi * (1.0 - uniform01()); }

  // Box-Muller, consuming exactly two uniforms per call.
  double normal(double mu, double sigma) {
    const double u1 = uniform01();
    const double u2 = uniform01();
    const double z = std::sqrt(-2.0 * std::log(1.0 - u1)) *
                     std::cos(2.0 * 3.141592653589793238462643383279502884 * u2);
    return mu + sigma * z;
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace cloudletsim
