#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "coc/bipartite.hpp"

namespace coc {

/// Capacity of each item, aligned with BipartiteGraph::side_b().
using CapacityFn = std::vector<Weight>;
/// Demand of each customer, aligned with BipartiteGraph::side_a().
using DemandFn = std::vector<Weight>;

/// Non-negative weight per edge number of the host graph.
using EdgeWeightFn = std::vector<Weight>;

/// Customers (side A) with demands and items (side B) with capacities.
struct AllocationProblem {
  BipartiteGraph graph;
  DemandFn demand;
  CapacityFn capacity;

  /// Throws InputError if demand or capacity do not match the sides.
  void validate() const;
};

/// Total value f gives to customer a (by A-index).
Weight allocated_to(const BipartiteGraph& g, const EdgeWeightFn& f,
                    std::size_t a);
/// Total value of item b (by B-index) handed out by f.
Weight allocated_from(const BipartiteGraph& g, const EdgeWeightFn& f,
                      std::size_t b);

bool is_edge_weight_fn(const BipartiteGraph& g, const EdgeWeightFn& f);
bool satisfies_capacities(const BipartiteGraph& g, const EdgeWeightFn& f,
                          std::span<const Weight> capacity);
bool satisfies_demands(const BipartiteGraph& g, const EdgeWeightFn& f,
                       std::span<const Weight> demand);
/// Every item has at most one incident edge of positive weight.
bool is_unsplitting(const BipartiteGraph& g, const EdgeWeightFn& f);
/// The positive-weight edges form a forest.
bool has_forest_support(const BipartiteGraph& g, const EdgeWeightFn& f);

/// Removes every cycle of the positive support by alternately shifting
/// the minimum cycle weight. Per-vertex sums are preserved exactly.
EdgeWeightFn cancel_cycles(const AllocationProblem& p, const EdgeWeightFn& f);

/// Rounds a feasible (possibly splitting) f to an unsplitting h in which
/// every item with positive f-degree goes whole to its parent customer in
/// the rooted support forest. Every customer u then receives at least
/// demand(u) - (W - 1) (W the largest capacity) and `root` (an A-index)
/// receives its full demand.
EdgeWeightFn round_unsplitting(const AllocationProblem& p,
                               const EdgeWeightFn& f, std::size_t root);

/// Largest capacity, or 0 when there are no items.
Weight max_capacity(std::span<const Weight> capacity);

}  // namespace coc
