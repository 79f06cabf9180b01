#include "semsum/transport.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "semsum/error.hpp"

namespace semsum {

TransportPlan solve_transport(std::span<const double> supply,
                              std::span<const double> demand, const CostMatrix& cost) {
  const std::size_t m = supply.size();
  const std::size_t n = demand.size();
  if (cost.rows != m || cost.cols != n || cost.values.size() != m * n) {
    throw Error("transport: cost matrix shape does not match supply/demand");
  }
  const double total_supply = std::accumulate(supply.begin(), supply.end(), 0.0);
  const double total_demand = std::accumulate(demand.begin(), demand.end(), 0.0);
  if (std::abs(total_supply - total_demand) > 1e-9 * std::max(1.0, total_supply)) {
    throw Error("transport: supply and demand totals differ");
  }

  TransportPlan plan;
  plan.flow.assign(m * n, 0.0);
  if (m == 0 || n == 0) return plan;

  const double eps = 1e-13 * std::max(1.0, total_supply);
  std::vector<double> rem_supply(supply.begin(), supply.end());
  std::vector<double> rem_demand(demand.begin(), demand.end());

  // Node layout: [0, m) sources, [m, m + n) sinks, then source S and sink T.
  const std::size_t node_s = m + n;
  const std::size_t node_t = m + n + 1;
  const std::size_t nodes = m + n + 2;
  constexpr double kInf = std::numeric_limits<double>::infinity();
  std::vector<double> potential(nodes, 0.0);
  std::vector<double> dist(nodes);
  std::vector<std::size_t> prev(nodes);
  std::vector<char> done(nodes);

  auto relax = [&](std::size_t from, std::size_t to, double arc_cost) {
    const double reduced = arc_cost + potential[from] - potential[to];
    const double candidate = dist[from] + std::max(0.0, reduced);
    if (candidate < dist[to]) {
      dist[to] = candidate;
      prev[to] = from;
    }
  };

  for (;;) {
    const bool supply_left = std::any_of(rem_supply.begin(), rem_supply.end(),
                                         [&](double r) { return r > eps; });
    const bool demand_left = std::any_of(rem_demand.begin(), rem_demand.end(),
                                         [&](double r) { return r > eps; });
    if (!supply_left || !demand_left) break;

    std::fill(dist.begin(), dist.end(), kInf);
    std::fill(done.begin(), done.end(), 0);
    dist[node_s] = 0.0;
    for (;;) {
      std::size_t u = nodes;
      for (std::size_t v = 0; v < nodes; ++v) {
        if (!done[v] && dist[v] < kInf && (u == nodes || dist[v] < dist[u])) u = v;
      }
      if (u == nodes) break;
      done[u] = 1;
      if (u == node_t) break;
      if (u == node_s) {
        for (std::size_t i = 0; i < m; ++i) {
          if (rem_supply[i] > eps) relax(u, i, 0.0);
        }
      } else if (u < m) {
        for (std::size_t j = 0; j < n; ++j) relax(u, m + j, cost(u, j));
      } else if (u < m + n) {
        const std::size_t j = u - m;
        for (std::size_t i = 0; i < m; ++i) {
          if (plan.flow[i * n + j] > eps) relax(u, i, -cost(i, j));
        }
        if (rem_demand[j] > eps) relax(u, node_t, 0.0);
      }
    }
    if (dist[node_t] == kInf) break;

    for (std::size_t v = 0; v < nodes; ++v) {
      potential[v] += std::min(dist[v], dist[node_t]);
    }

    // Walk back from T to find the bottleneck, then augment.
    const std::size_t last_sink = prev[node_t] - m;
    double push = rem_demand[last_sink];
    std::size_t v = prev[node_t];
    while (prev[v] != node_s) {
      const std::size_t u = prev[v];
      if (u >= m) push = std::min(push, plan.flow[v * n + (u - m)]);  // sink -> source
      v = u;
    }
    push = std::min(push, rem_supply[v]);

    rem_demand[last_sink] -= push;
    v = prev[node_t];
    while (prev[v] != node_s) {
      const std::size_t u = prev[v];
      if (u < m) {
        plan.flow[u * n + (v - m)] += push;
      } else {
        plan.flow[v * n + (u - m)] -= push;
      }
      v = u;
    }
    rem_supply[v] -= push;
  }

  for (std::size_t k = 0; k < m * n; ++k) {
    if (plan.flow[k] > 0.0) plan.cost += plan.flow[k] * cost.values[k];
  }
  return plan;
}

}  // namespace semsum
