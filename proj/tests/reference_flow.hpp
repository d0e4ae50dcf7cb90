// Test-only reference: textbook min-cost max-flow via Bellman-Ford
// successive shortest paths on the full bipartite network. Slow and simple,
// used to cross-check the production solver on mid-size instances.
#pragma once

#include <limits>
#include <vector>

#include "cloudletsim/placement.hpp"

namespace cloudletsim::testref {

inline Assignment solve_by_bellman_ford(const ValueProblem& p) {
  const int num_avatars = static_cast<int>(p.value.size());
  const int num_cloudlets = static_cast<int>(p.capacities.size());
  // nodes: 0 = source, 1..I avatars, I+1..I+J cloudlets, I+J+1 = sink
  const int source = 0;
  const int sink = num_avatars + num_cloudlets + 1;
  const int num_nodes = sink + 1;

  struct Edge {
    int to;
    int cap;
    double cost;
    int rev;
  };
  std::vector<std::vector<Edge>> graph(static_cast<std::size_t>(num_nodes));
  auto add_edge = [&graph](int from, int to, int cap, double cost) {
    graph[static_cast<std::size_t>(from)].push_back(
        Edge{to, cap, cost, static_cast<int>(graph[static_cast<std::size_t>(to)].size())});
    graph[static_cast<std::size_t>(to)].push_back(
        Edge{from, 0, -cost, static_cast<int>(graph[static_cast<std::size_t>(from)].size()) - 1});
  };

  for (int i = 0; i < num_avatars; ++i) add_edge(source, 1 + i, 1, 0.0);
  for (int i = 0; i < num_avatars; ++i)
    for (int j = 0; j < num_cloudlets; ++j)
      add_edge(1 + i, 1 + num_avatars + j, 1,
               -p.value[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
  for (int j = 0; j < num_cloudlets; ++j)
    add_edge(1 + num_avatars + j, sink, p.capacities[static_cast<std::size_t>(j)], 0.0);

  const double inf = std::numeric_limits<double>::infinity();
  for (int unit = 0; unit < num_avatars; ++unit) {
    std::vector<double> dist(static_cast<std::size_t>(num_nodes), inf);
    std::vector<int> prev_node(static_cast<std::size_t>(num_nodes), -1);
    std::vector<int> prev_edge(static_cast<std::size_t>(num_nodes), -1);
    dist[source] = 0.0;
    for (int round = 0; round < num_nodes; ++round) {
      bool changed = false;
      for (int u = 0; u < num_nodes; ++u) {
        if (dist[static_cast<std::size_t>(u)] == inf) continue;
        const auto& edges = graph[static_cast<std::size_t>(u)];
        for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
          const Edge& edge = edges[static_cast<std::size_t>(e)];
          if (edge.cap <= 0) continue;
          const double nd = dist[static_cast<std::size_t>(u)] + edge.cost;
          if (nd < dist[static_cast<std::size_t>(edge.to)] - 1e-15) {
            dist[static_cast<std::size_t>(edge.to)] = nd;
            prev_node[static_cast<std::size_t>(edge.to)] = u;
            prev_edge[static_cast<std::size_t>(edge.to)] = e;
            changed = true;
          }
        }
      }
      if (!changed) break;
    }
    if (prev_node[static_cast<std::size_t>(sink)] < 0)
      throw std::logic_error("reference flow: no augmenting path");
    // push one unit along the shortest path
    for (int v = sink; v != source; v = prev_node[static_cast<std::size_t>(v)]) {
      Edge& edge = graph[static_cast<std::size_t>(
          prev_node[static_cast<std::size_t>(v)])][static_cast<std::size_t>(
          prev_edge[static_cast<std::size_t>(v)])];
      edge.cap -= 1;
      graph[static_cast<std::size_t>(v)][static_cast<std::size_t>(edge.rev)].cap += 1;
    }
  }

  Assignment out;
  out.avatar_to_cloudlet.assign(static_cast<std::size_t>(num_avatars), -1);
  for (int i = 0; i < num_avatars; ++i) {
    for (const Edge& e : graph[static_cast<std::size_t>(1 + i)]) {
      // the saturated avatar->cloudlet edge marks the assignment
      if (e.to >= 1 + num_avatars && e.to < 1 + num_avatars + num_cloudlets &&
          e.cap == 0)
        out[i] = e.to - 1 - num_avatars;
    }
  }
  return out;
}

}  // namespace cloudletsim::testref
