#include "cloudletsim/migration.hpp"

#include <cmath>

#include "cloudletsim/errors.hpp"

namespace cloudletsim {

namespace {

// Data transmitted in round n: M * (D/R)^n, evaluated with the same
// multiply-divide sequence the round oracle uses so that threshold
// comparisons agree between the two paths.
double round_data_bits(const MigrationParams& p, int n) {
  double data = p.M_bits;
  for (int i = 0; i < n; ++i) data = data * p.D_bits_per_s / p.R_bits_per_s;
  return data;
}

}  // namespace

int migration_rounds(const MigrationParams& p) {
  if (p.R_bits_per_s <= p.D_bits_per_s ||
      p.D_bits_per_s / p.R_bits_per_s >= 1.0)
    throw DivergentMigrationError(
        "pre-copy migration diverges: R <= D (dirtying outpaces transfer)");
  if (p.D_bits_per_s == 0.0) return 1;
  if (p.M_bits <= p.M_th_bits) return 1;

  const double q = p.D_bits_per_s / p.R_bits_per_s;
  const double x = std::log(p.M_th_bits / p.M_bits) / std::log(q) + 1.0;
  int n = std::max(1, static_cast<int>(std::ceil(x)));
  // The log/ceil route can be off by one right at threshold boundaries;
  // settle N against the stopping rule itself.
  while (n >= 2 && round_data_bits(p, n - 2) <= p.M_th_bits) --n;
  while (round_data_bits(p, n - 1) > p.M_th_bits) ++n;
  return n;
}

double migration_time(const MigrationParams& p) {
  const int n = migration_rounds(p);
  if (p.D_bits_per_s == 0.0) return p.M_bits / p.R_bits_per_s;
  const double q = p.D_bits_per_s / p.R_bits_per_s;
  return p.M_bits / (p.R_bits_per_s - p.D_bits_per_s) *
         (1.0 - std::pow(q, n + 1));
}

double migration_time_oracle(const MigrationParams& p) {
  if (p.R_bits_per_s <= p.D_bits_per_s ||
      p.D_bits_per_s / p.R_bits_per_s >= 1.0)
    throw DivergentMigrationError(
        "pre-copy migration diverges: R <= D (dirtying outpaces transfer)");
  double total_s = 0.0;
  double data = p.M_bits;  // round 0 transmits the whole memory
  for (;;) {
    total_s += data / p.R_bits_per_s;
    const double dirty = data * p.D_bits_per_s / p.R_bits_per_s;
    if (data <= p.M_th_bits) {
      // This round's transfer was small enough; stop-and-copy ships the
      // dirty data it generated.
      total_s += dirty / p.R_bits_per_s;
      return total_s;
    }
    data = dirty;
  }
}

double cost_coefficient(const AvatarWorkload& w, const ImpactWeights& k) {
  return k.alpha * (k.w_net * w.u_net + k.w_disk * w.u_disk +
                    k.w_mem * w.u_mem + k.w_cpu * w.u_cpu);
}

double migration_gain(int old_cloudlet, int new_cloudlet, int next_bs,
                      const Topology& topology) {
  return topology.delay_ms(old_cloudlet, next_bs) -
         topology.delay_ms(new_cloudlet, next_bs);
}

double migration_cost(double kappa, double migration_time_s, bool moved) {
  return moved ? kappa * migration_time_s : 0.0;
}

double migration_profit(double gain_ms, double cost) { return gain_ms - cost; }

}  // namespace cloudletsim
