#pragma once

#include <string>
#include <vector>

#include "cloudletsim/migration.hpp"
#include "cloudletsim/topology.hpp"

namespace cloudletsim {

// Everything a planner needs for one slot's decision: where avatars are now,
// where their UEs will be, and the per-avatar migration penalty kappa * T.
struct PlacementInstance {
  const Topology* topology = nullptr;
  Assignment current;                   // x^t, capacity-feasible
  Association next_association;         // y^{t+1}
  std::vector<double> kappa_T;          // kappa_i * T_i^mig, >= 0
  std::vector<double> migration_time_s; // T_i^mig
  std::vector<int> capacities;          // s_j per cloudlet

  int num_avatars() const { return current.size(); }
  int num_cloudlets() const { return static_cast<int>(capacities.size()); }
};

PlacementInstance make_instance(const Topology& topology, Assignment current,
                                Association next_association,
                                std::vector<double> kappa_T,
                                std::vector<double> migration_time_s);

struct PlacementPlan {
  Assignment next;                        // x^{t+1}, one-hot, capacity-feasible
  std::vector<ProfitBreakdown> breakdowns;
  double total_profit = 0.0;              // sum of breakdown profits

  long long num_migrations() const {
    long long n = 0;
    for (const ProfitBreakdown& b : breakdowns) n += b.moved ? 1 : 0;
    return n;
  }
};

// Per-avatar contribution of placing avatar i at cloudlet j, up to a
// per-avatar constant: -d_{j,k(i)} - kappa_T[i] * [j != current(i)].
// Maximizing this over j maximizes the avatar's profit.
double per_avatar_value(const PlacementInstance& instance, int avatar,
                        int cloudlet);

// Gain/cost/profit of a candidate next assignment against the instance's
// current one. All planners report through this single scorer.
PlacementPlan score_plan(const PlacementInstance& instance, Assignment next);

// Exact profit maximization. Binary variables square to themselves, so the
// objective is linear in x^{t+1} and the constraints form a transportation
// polytope; the optimum is found by min-cost flow (successive shortest
// paths over the cloudlet graph). Ties between optimal assignments prefer
// keeping an avatar where it is, then the lower cloudlet index.
PlacementPlan plan_primal(const PlacementInstance& instance);

// Greedy baseline: avatars in ascending index each take the
// remaining-capacity cloudlet with the lowest delay to their UE's next BS,
// ties to the lower index. Ignores migration cost entirely.
PlacementPlan plan_far(const PlacementInstance& instance);

// No-op baseline: avatars never move after initial deployment.
PlacementPlan plan_static(const PlacementInstance& instance);

// Exhaustive test oracle. Enumerates every capacity-feasible one-hot
// assignment; guarded to at most 8 avatars and 4 cloudlets.
PlacementPlan plan_bruteforce(const PlacementInstance& instance);

// Greedy nearest-available deployment at t = 0, same rule as plan_far but
// keyed on the initial associations.
Assignment initial_placement(const Association& association,
                             const Topology& topology);

// Dense form of the optimization the exact solver consumes; round-trips
// through a CSV pair for offline solver debugging.
struct ValueProblem {
  std::vector<std::vector<double>> value;  // [avatar][cloudlet]
  std::vector<int> current;                // avatar -> current cloudlet
  std::vector<int> capacities;             // per cloudlet
};

ValueProblem to_value_problem(const PlacementInstance& instance);

// Exact optimum of sum value[i][assignment[i]] under the capacity
// constraints, with plan_primal's tie-breaking.
Assignment solve_value_problem(const ValueProblem& problem);

void write_value_problem(const ValueProblem& problem,
                         const std::string& values_csv_path,
                         const std::string& capacities_csv_path);
ValueProblem read_value_problem(const std::string& values_csv_path,
                                const std::string& capacities_csv_path);

}  // namespace cloudletsim
