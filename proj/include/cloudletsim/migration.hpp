#pragma once

#include "cloudletsim/topology.hpp"
#include "cloudletsim/workload.hpp"

namespace cloudletsim {

// Inputs of the pre-copy migration time model, all in bits and bits/s.
// R is the constant bandwidth provisioned for the migration; M_th is the
// dirty-data size below which the final stop-and-copy round starts.
struct MigrationParams {
  double M_bits = 0.0;
  double D_bits_per_s = 0.0;
  double R_bits_per_s = 0.0;
  double M_th_bits = 0.0;
};

// Migration impact factors and the penalty coefficient alpha that together
// map resource utilization to the cost coefficient kappa.
struct ImpactWeights {
  double w_net = 0.8;
  double w_mem = 0.6;
  double w_disk = 0.4;
  double w_cpu = 0.1;
  double alpha = 5.0;
};

struct ProfitBreakdown {
  double gain_ms = 0.0;
  double cost = 0.0;
  double profit = 0.0;           // gain_ms - cost, exactly
  double migration_time_s = 0.0; // 0 when the avatar did not move
  bool moved = false;
};

// Number of pre-copy rounds N (round 0 = full copy, round N = stop-and-copy):
// the smallest N >= 1 such that the data transmitted in round N-1 is at most
// M_th. For 0 < D < R and M > M_th this is ceil(log_{D/R}(M_th / M) + 1);
// D = 0 or M <= M_th give N = 1. Throws DivergentMigrationError when R <= D.
int migration_rounds(const MigrationParams& params);

// Total migration time, closed form: M / (R - D) * (1 - (D/R)^(N+1)),
// with N = migration_rounds(); M / R when D = 0.
double migration_time(const MigrationParams& params);

// Independent test oracle for migration_time: simulates the rounds one by
// one (round n transmits the dirty data generated during round n-1) and sums
// their durations. Shares no code with the closed form.
double migration_time_oracle(const MigrationParams& params);

// kappa_i = alpha * (w_net u_net + w_disk u_disk + w_mem u_mem + w_cpu u_cpu).
double cost_coefficient(const AvatarWorkload& workload,
                        const ImpactWeights& weights);

// Delay reduction achieved by moving from old_cloudlet to new_cloudlet,
// evaluated at the UE's next-slot BS. May be negative.
double migration_gain(int old_cloudlet, int new_cloudlet, int next_bs,
                      const Topology& topology);

// kappa * migration time when the avatar moved, 0 otherwise.
double migration_cost(double kappa, double migration_time_s, bool moved);

// f = r - c.
double migration_profit(double gain_ms, double cost);

}  // namespace cloudletsim
