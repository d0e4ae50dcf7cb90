#include "cloudletsim/placement.hpp"

#include <algorithm>
#include <cstddef>
#include <fstream>
#include <limits>
#include <sstream>
#include <utility>

#include "cloudletsim/csv.hpp"
#include "cloudletsim/errors.hpp"

namespace cloudletsim {

namespace {

void require_capacity(long long total_capacity, int num_avatars) {
  if (total_capacity < num_avatars)
    throw InsufficientCapacityError(
        "insufficient capacity: " + std::to_string(num_avatars) +
        " avatars for " + std::to_string(total_capacity) + " slots");
}

// Secondary tie objective, summed over avatars: staying costs 0, a move
// costs 1 plus an index term small enough that the move count always
// dominates the index sum.
double tie_cost(int cloudlet, int current, int num_cloudlets,
                int num_avatars) {
  if (cloudlet == current) return 0.0;
  return 1.0 + static_cast<double>(cloudlet) /
                   (static_cast<double>(num_cloudlets) *
                        static_cast<double>(num_avatars) +
                    1.0);
}

// (primary, tie) cost pair ordered lexicographically. Both components stay
// non-negative on arcs, which keeps Dijkstra applicable.
struct LexCost {
  double c = 0.0;
  double t = 0.0;

  LexCost operator+(const LexCost& o) const { return {c + o.c, t + o.t}; }
  LexCost operator-(const LexCost& o) const { return {c - o.c, t - o.t}; }
  bool operator<(const LexCost& o) const {
    if (c != o.c) return c < o.c;
    return t < o.t;
  }
};

constexpr double kInf = std::numeric_limits<double>::infinity();

// Exact transportation solver: avatars are inserted one at a time along a
// shortest augmenting path in the residual graph whose nodes are cloudlets.
// Cloudlet potentials keep residual arc costs non-negative (Jonker-Volgenant
// style), so each insertion is a plain Dijkstra over |J| nodes.
class TransportSolver {
 public:
  explicit TransportSolver(const ValueProblem& p)
      : p_(p),
        num_avatars_(static_cast<int>(p.value.size())),
        num_cloudlets_(static_cast<int>(p.capacities.size())) {
    long long total_capacity = 0;
    for (int cap : p_.capacities) total_capacity += cap;
    require_capacity(total_capacity, num_avatars_);

    row_shift_.resize(static_cast<std::size_t>(num_avatars_));
    for (int i = 0; i < num_avatars_; ++i) {
      double mx = -kInf;
      for (int j = 0; j < num_cloudlets_; ++j)
        mx = std::max(mx, p_.value[static_cast<std::size_t>(i)]
                                  [static_cast<std::size_t>(j)]);
      row_shift_[static_cast<std::size_t>(i)] = mx;
    }

    potential_.assign(static_cast<std::size_t>(num_cloudlets_), LexCost{});
    assigned_.assign(static_cast<std::size_t>(num_cloudlets_), {});
    where_.assign(static_cast<std::size_t>(num_avatars_), -1);
    pos_in_list_.assign(static_cast<std::size_t>(num_avatars_), -1);
    delta_valid_.assign(static_cast<std::size_t>(num_cloudlets_), false);
    delta_.assign(static_cast<std::size_t>(num_cloudlets_), {});
    delta_avatar_.assign(static_cast<std::size_t>(num_cloudlets_), {});
  }

  Assignment solve() {
    for (int i = 0; i < num_avatars_; ++i) insert(i);
    Assignment out;
    out.avatar_to_cloudlet = where_;
    return out;
  }

 private:
  // Arc cost of placing avatar i at cloudlet j, shifted per avatar so the
  // primary component is >= 0.
  LexCost arc_cost(int i, int j) const {
    return {row_shift_[static_cast<std::size_t>(i)] -
                p_.value[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)],
            tie_cost(j, p_.current[static_cast<std::size_t>(i)], num_cloudlets_,
                     num_avatars_)};
  }

  void ensure_delta_row(int j) {
    auto ju = static_cast<std::size_t>(j);
    if (delta_valid_[ju]) return;
    delta_[ju].assign(static_cast<std::size_t>(num_cloudlets_),
                      LexCost{kInf, kInf});
    delta_avatar_[ju].assign(static_cast<std::size_t>(num_cloudlets_), -1);
    for (int a : assigned_[ju]) {
      const LexCost at_j = arc_cost(a, j);
      for (int v = 0; v < num_cloudlets_; ++v) {
        if (v == j) continue;
        const LexCost move = arc_cost(a, v) - at_j;
        auto vu = static_cast<std::size_t>(v);
        if (move < delta_[ju][vu]) {
          delta_[ju][vu] = move;
          delta_avatar_[ju][vu] = a;
        }
      }
    }
    delta_valid_[ju] = true;
  }

  void place(int avatar, int cloudlet) {
    auto ju = static_cast<std::size_t>(cloudlet);
    pos_in_list_[static_cast<std::size_t>(avatar)] =
        static_cast<int>(assigned_[ju].size());
    assigned_[ju].push_back(avatar);
    where_[static_cast<std::size_t>(avatar)] = cloudlet;
    delta_valid_[ju] = false;
  }

  void remove(int avatar) {
    const int j = where_[static_cast<std::size_t>(avatar)];
    auto ju = static_cast<std::size_t>(j);
    const int pos = pos_in_list_[static_cast<std::size_t>(avatar)];
    const int last = assigned_[ju].back();
    assigned_[ju][static_cast<std::size_t>(pos)] = last;
    pos_in_list_[static_cast<std::size_t>(last)] = pos;
    assigned_[ju].pop_back();
    where_[static_cast<std::size_t>(avatar)] = -1;
    delta_valid_[ju] = false;
  }

  void insert(int avatar) {
    const auto J = static_cast<std::size_t>(num_cloudlets_);
    std::vector<LexCost> dist(J);
    std::vector<int> parent_from(J, -1);   // -1: reached via the entry arc
    std::vector<int> parent_avatar(J, -1);
    std::vector<char> settled(J, 0);
    for (int j = 0; j < num_cloudlets_; ++j)
      dist[static_cast<std::size_t>(j)] =
          arc_cost(avatar, j) - potential_[static_cast<std::size_t>(j)];

    int target = -1;
    for (;;) {
      int u = -1;
      for (int j = 0; j < num_cloudlets_; ++j) {
        auto jj = static_cast<std::size_t>(j);
        if (settled[jj] || dist[jj].c == kInf) continue;
        if (u < 0 || dist[jj] < dist[static_cast<std::size_t>(u)]) u = j;
      }
      if (u < 0)
        throw SimError("internal: augmenting path search exhausted");
      auto uu = static_cast<std::size_t>(u);
      settled[uu] = 1;
      if (static_cast<int>(assigned_[uu].size()) <
          p_.capacities[uu]) {
        target = u;
        break;
      }
      ensure_delta_row(u);
      for (int v = 0; v < num_cloudlets_; ++v) {
        auto vu = static_cast<std::size_t>(v);
        if (settled[vu] || delta_avatar_[uu][vu] < 0) continue;
        const LexCost cand =
            dist[uu] + delta_[uu][vu] + potential_[uu] - potential_[vu];
        if (cand < dist[vu]) {
          dist[vu] = cand;
          parent_from[vu] = u;
          parent_avatar[vu] = delta_avatar_[uu][vu];
        }
      }
    }

    // Reassign the displaced avatars along the path, then admit the new one.
    int v = target;
    std::vector<std::pair<int, int>> moves;  // (avatar, to_cloudlet)
    while (parent_avatar[static_cast<std::size_t>(v)] >= 0) {
      moves.emplace_back(parent_avatar[static_cast<std::size_t>(v)], v);
      v = parent_from[static_cast<std::size_t>(v)];
    }
    for (const auto& [a, to] : moves) {
      remove(a);
      place(a, to);
    }
    place(avatar, v);

    const LexCost base = dist[static_cast<std::size_t>(target)];
    for (int j = 0; j < num_cloudlets_; ++j) {
      auto jj = static_cast<std::size_t>(j);
      if (settled[jj])
        potential_[jj] = potential_[jj] + dist[jj] - base;
    }
  }

  const ValueProblem& p_;
  int num_avatars_;
  int num_cloudlets_;
  std::vector<double> row_shift_;
  std::vector<LexCost> potential_;
  std::vector<std::vector<int>> assigned_;
  std::vector<int> where_;
  std::vector<int> pos_in_list_;
  std::vector<char> delta_valid_;
  std::vector<std::vector<LexCost>> delta_;        // [j][v] cheapest move j->v
  std::vector<std::vector<int>> delta_avatar_;     // argmin avatar for delta_
};

Assignment greedy_nearest(const Association& association,
                          const Topology& topology,
                          const std::vector<int>& capacities) {
  const int num_avatars = association.size();
  const int num_cloudlets = static_cast<int>(capacities.size());
  long long total_capacity = 0;
  for (int cap : capacities) total_capacity += cap;
  require_capacity(total_capacity, num_avatars);

  std::vector<int> occ(static_cast<std::size_t>(num_cloudlets), 0);
  Assignment next;
  next.avatar_to_cloudlet.resize(static_cast<std::size_t>(num_avatars));
  for (int i = 0; i < num_avatars; ++i) {
    const int k = association[i];
    int best = -1;
    double best_delay = kInf;
    for (int j = 0; j < num_cloudlets; ++j) {
      auto ju = static_cast<std::size_t>(j);
      if (occ[ju] >= capacities[ju]) continue;
      const double d = topology.delay_ms(j, k);
      if (d < best_delay) {
        best_delay = d;
        best = j;
      }
    }
    next[i] = best;
    ++occ[static_cast<std::size_t>(best)];
  }
  return next;
}

}  // namespace

PlacementInstance make_instance(const Topology& topology, Assignment current,
                                Association next_association,
                                std::vector<double> kappa_T,
                                std::vector<double> migration_time_s) {
  PlacementInstance inst;
  inst.topology = &topology;
  inst.current = std::move(current);
  inst.next_association = std::move(next_association);
  inst.kappa_T = std::move(kappa_T);
  inst.migration_time_s = std::move(migration_time_s);
  inst.capacities.reserve(static_cast<std::size_t>(topology.num_cloudlets()));
  for (int j = 0; j < topology.num_cloudlets(); ++j)
    inst.capacities.push_back(topology.site(j).capacity);
  return inst;
}

double per_avatar_value(const PlacementInstance& instance, int avatar,
                        int cloudlet) {
  const double d =
      instance.topology->delay_ms(cloudlet, instance.next_association[avatar]);
  const double penalty = cloudlet == instance.current[avatar]
                             ? 0.0
                             : instance.kappa_T[static_cast<std::size_t>(avatar)];
  return -d - penalty;
}

PlacementPlan score_plan(const PlacementInstance& instance, Assignment next) {
  PlacementPlan plan;
  plan.next = std::move(next);
  const int n = instance.num_avatars();
  plan.breakdowns.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    ProfitBreakdown& b = plan.breakdowns[static_cast<std::size_t>(i)];
    const int from = instance.current[i];
    const int to = plan.next[i];
    b.moved = to != from;
    b.gain_ms = migration_gain(from, to, instance.next_association[i],
                               *instance.topology);
    b.cost = migration_cost(instance.kappa_T[static_cast<std::size_t>(i)], 1.0,
                            b.moved);
    b.migration_time_s =
        b.moved ? instance.migration_time_s[static_cast<std::size_t>(i)] : 0.0;
    b.profit = migration_profit(b.gain_ms, b.cost);
    plan.total_profit += b.profit;
  }
  return plan;
}

ValueProblem to_value_problem(const PlacementInstance& instance) {
  ValueProblem p;
  const int I = instance.num_avatars();
  const int J = instance.num_cloudlets();
  p.value.assign(static_cast<std::size_t>(I),
                 std::vector<double>(static_cast<std::size_t>(J), 0.0));
  for (int i = 0; i < I; ++i)
    for (int j = 0; j < J; ++j)
      p.value[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          per_avatar_value(instance, i, j);
  p.current = instance.current.avatar_to_cloudlet;
  p.capacities = instance.capacities;
  return p;
}

Assignment solve_value_problem(const ValueProblem& problem) {
  return TransportSolver(problem).solve();
}

PlacementPlan plan_primal(const PlacementInstance& instance) {
  return score_plan(instance, solve_value_problem(to_value_problem(instance)));
}

PlacementPlan plan_far(const PlacementInstance& instance) {
  return score_plan(instance,
                    greedy_nearest(instance.next_association,
                                   *instance.topology, instance.capacities));
}

PlacementPlan plan_static(const PlacementInstance& instance) {
  PlacementPlan plan;
  plan.next = instance.current;
  plan.breakdowns.assign(
      static_cast<std::size_t>(instance.num_avatars()), ProfitBreakdown{});
  plan.total_profit = 0.0;
  return plan;
}

PlacementPlan plan_bruteforce(const PlacementInstance& instance) {
  const int I = instance.num_avatars();
  const int J = instance.num_cloudlets();
  int hosting_sites = 0;  // capacity-0 sites are BS-only, never enumerated
  for (int cap : instance.capacities) hosting_sites += cap > 0 ? 1 : 0;
  if (I > 8 || hosting_sites > 4)
    throw InstanceTooLargeError(
        "brute force is guarded to at most 8 avatars and 4 cloudlets");
  long long total_capacity = 0;
  for (int cap : instance.capacities) total_capacity += cap;
  require_capacity(total_capacity, I);

  const ValueProblem p = to_value_problem(instance);

  std::vector<int> occ(static_cast<std::size_t>(J), 0);
  std::vector<int> choice(static_cast<std::size_t>(I), 0);
  std::vector<int> best;
  double best_profit = -kInf;
  double best_tie = kInf;

  // Depth-first over all capacity-feasible one-hot assignments. The key is
  // (max profit, min tie sum, lexicographically smallest vector), the same
  // ordering the exact solver's lexicographic arc costs realize.
  auto consider = [&](double profit, double tie) {
    if (profit > best_profit ||
        (profit == best_profit &&
         (tie < best_tie || (tie == best_tie &&
                             (best.empty() || choice < best))))) {
      best_profit = profit;
      best_tie = tie;
      best = choice;
    }
  };
  auto dfs = [&](auto&& self, int i, double profit, double tie) -> void {
    if (i == I) {
      consider(profit, tie);
      return;
    }
    for (int j = 0; j < J; ++j) {
      auto ju = static_cast<std::size_t>(j);
      if (occ[ju] >= instance.capacities[ju]) continue;
      ++occ[ju];
      choice[static_cast<std::size_t>(i)] = j;
      const int cur = instance.current[i];
      const double gain = migration_gain(cur, j, instance.next_association[i],
                                         *instance.topology);
      const double cost =
          j == cur ? 0.0 : instance.kappa_T[static_cast<std::size_t>(i)];
      self(self, i + 1, profit + migration_profit(gain, cost),
           tie + tie_cost(j, cur, J, I));
      --occ[ju];
    }
  };
  dfs(dfs, 0, 0.0, 0.0);

  Assignment next;
  next.avatar_to_cloudlet = best;
  return score_plan(instance, std::move(next));
}

Assignment initial_placement(const Association& association,
                             const Topology& topology) {
  std::vector<int> capacities;
  capacities.reserve(static_cast<std::size_t>(topology.num_cloudlets()));
  for (int j = 0; j < topology.num_cloudlets(); ++j)
    capacities.push_back(topology.site(j).capacity);
  return greedy_nearest(association, topology, capacities);
}

void write_value_problem(const ValueProblem& problem,
                         const std::string& values_csv_path,
                         const std::string& capacities_csv_path) {
  std::ofstream values(values_csv_path);
  if (!values) throw IoError("cannot write " + values_csv_path);
  const int J = static_cast<int>(problem.capacities.size());
  values << "avatar,current";
  for (int j = 0; j < J; ++j) values << ",v" << j;
  values << "\n";
  for (std::size_t i = 0; i < problem.value.size(); ++i) {
    values << i << "," << problem.current[i];
    for (int j = 0; j < J; ++j)
      values << "," << format_double(problem.value[i][static_cast<std::size_t>(j)]);
    values << "\n";
  }
  if (!values.flush()) throw IoError("cannot write " + values_csv_path);

  std::ofstream caps(capacities_csv_path);
  if (!caps) throw IoError("cannot write " + capacities_csv_path);
  caps << "cloudlet,capacity\n";
  for (std::size_t j = 0; j < problem.capacities.size(); ++j)
    caps << j << "," << problem.capacities[j] << "\n";
  if (!caps.flush()) throw IoError("cannot write " + capacities_csv_path);
}

ValueProblem read_value_problem(const std::string& values_csv_path,
                                const std::string& capacities_csv_path) {
  ValueProblem p;
  std::ifstream caps(capacities_csv_path);
  if (!caps) throw IoError("cannot open " + capacities_csv_path);
  std::string line;
  if (!std::getline(caps, line) || line != "cloudlet,capacity")
    throw ConfigError(capacities_csv_path + ": bad header");
  while (std::getline(caps, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string idx, cap;
    if (!std::getline(ls, idx, ',') || !std::getline(ls, cap))
      throw ConfigError(capacities_csv_path + ": malformed row '" + line + "'");
    p.capacities.push_back(std::stoi(cap));
  }

  std::ifstream values(values_csv_path);
  if (!values) throw IoError("cannot open " + values_csv_path);
  if (!std::getline(values, line) || line.rfind("avatar,current", 0) != 0)
    throw ConfigError(values_csv_path + ": bad header");
  while (std::getline(values, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string field;
    std::vector<std::string> fields;
    while (std::getline(ls, field, ',')) fields.push_back(field);
    if (fields.size() != 2 + p.capacities.size())
      throw ConfigError(values_csv_path + ": malformed row '" + line + "'");
    p.current.push_back(std::stoi(fields[1]));
    std::vector<double> row;
    for (std::size_t j = 2; j < fields.size(); ++j)
      row.push_back(std::stod(fields[j]));
    p.value.push_back(std::move(row));
  }
  return p;
}

}  // namespace cloudletsim
