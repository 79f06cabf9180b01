#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace semsum {

// Dense row-major cost matrix for a transportation problem.
struct CostMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> values;

  double operator()(std::size_t i, std::size_t j) const { return values[i * cols + j]; }
};

struct TransportPlan {
  double cost = 0.0;
  std::vector<double> flow;  // rows x cols, row-major
};

// Exact minimum-cost transportation between nonnegative supply and demand
// vectors of equal total mass, solved as a min-cost flow with successive
// shortest paths (Dijkstra over reduced costs). Costs must be nonnegative.
TransportPlan solve_transport(std::span<const double> supply,
                              std::span<const double> demand, const CostMatrix& cost);

}  // namespace semsum
