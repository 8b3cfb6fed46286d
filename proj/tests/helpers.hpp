#pragma once

// Random inputs shared by the unit tests and the acceptance runner.

#include <random>
#include <vector>

#include "coc/allocation.hpp"
#include "coc/bipartite.hpp"
#include "coc/generators.hpp"

namespace coc::testing {

inline int pick(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

/// A = {0..na-1}, B = {100..100+nb-1}, each edge present with probability p.
inline BipartiteGraph random_bipartite(int na, int nb, double p, Rng& rng) {
  VertexSet a, b;
  for (int i = 0; i < na; ++i) a.push_back(i);
  for (int i = 0; i < nb; ++i) b.push_back(100 + i);
  BipartiteGraph g(a, b);
  std::bernoulli_distribution coin(p);
  for (Vertex u : a) {
    for (Vertex v : b) {
      if (coin(rng)) g.add_edge(u, v);
    }
  }
  return g;
}

/// Adds an edge to every isolated item.
inline void attach_isolated_items(BipartiteGraph& g, Rng& rng) {
  for (std::size_t b = 0; b < g.size_b(); ++b) {
    if (g.edges_at_b(b).empty()) {
      g.add_edge_by_index(static_cast<std::size_t>(
                              pick(rng, 0, static_cast<int>(g.size_a()) - 1)), b);
    }
  }
}

/// A random splitting allocation on a random bipartite graph; demands are
/// set to exactly what each customer receives, so f is feasible.
struct RandomAllocation {
  AllocationProblem problem;
  EdgeWeightFn f;
};

inline RandomAllocation random_allocation(int max_a, int max_b, int max_w, Rng& rng) {
  RandomAllocation out;
  const int na = pick(rng, 1, max_a);
  const int nb = pick(rng, 1, max_b);
  out.problem.graph = random_bipartite(na, nb, std::uniform_real_distribution<double>(0.2, 0.9)(rng), rng);
  const BipartiteGraph& g = out.problem.graph;
  out.problem.capacity.resize(g.size_b());
  out.f.assign(g.num_edges(), 0);
  for (std::size_t b = 0; b < g.size_b(); ++b) {
    const Weight cap = pick(rng, 1, max_w);
    out.problem.capacity[b] = cap;
    // Split the item's value (or part of it) among its neighbors.
    Weight left = pick(rng, 0, 3) == 0 ? pick(rng, 0, static_cast<int>(cap)) : cap;
    auto inc = g.edges_at_b(b);
    while (left > 0 && !inc.empty()) {
      const std::size_t e = inc[static_cast<std::size_t>(pick(rng, 0, static_cast<int>(inc.size()) - 1))];
      const Weight give = pick(rng, 1, static_cast<int>(left));
      out.f[e] += give;
      left -= give;
    }
  }
  out.problem.demand.resize(g.size_a());
  for (std::size_t a = 0; a < g.size_a(); ++a) {
    const Weight got = allocated_to(g, out.f, a);
    out.problem.demand[a] = got - (got > 0 ? pick(rng, 0, 1) : 0);
  }
  return out;
}

}  // namespace coc::testing
