#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "coc/allocation.hpp"
#include "coc/bipartite.hpp"
#include "coc/graph.hpp"
#include "coc/lp.hpp"
#include "coc/solvers.hpp"

namespace coc {

/// X on side A against one node per component of G[Y] on side B, node
/// weight = component size. A component's node is named by its smallest
/// vertex.
struct ComponentGraph {
  BipartiteGraph bipartite;
  /// Aligned with bipartite.side_b().
  std::vector<VertexSet> components;
  /// Aligned with bipartite.side_b().
  CapacityFn weight;

  const VertexSet& component_of(Vertex node) const {
    return components[bipartite.b_index(node)];
  }
};

/// x and y must be disjoint vertex sets of g.
ComponentGraph build_component_graph(const Graph& g, const VertexSet& x,
                                     const VertexSet& y);

/// (X, Y) with N(Y) within X, components of G[Y] of size at most ell and
/// a weighted (2 ell - 1)-expansion of X into the component graph.
struct ReduciblePair {
  VertexSet x;
  VertexSet y;
  ComponentGraph graph;    // component graph of (x, y)
  EdgeWeightFn expansion;  // on graph.bipartite
  /// A member of x receiving at least 2 ell from the expansion, if any.
  std::optional<Vertex> strict_at;
};

/// Checks every defining condition of a reducible pair against g.
bool is_reducible_pair(const Graph& g, int ell, const ReduciblePair& pair);

/// Some reducible pair with X inside a and Y inside b, if one exists.
/// Components of G[b] that are larger than ell or that see vertices
/// outside a are discarded first.
std::optional<ReduciblePair> find_reducible_pair_in(const COCInstance& inst,
                                                    const VertexSet& a,
                                                    const VertexSet& b);

/// Parts C_i, one per member of X, partitioning X and Y.
struct WitnessPartition {
  std::vector<std::pair<Vertex, VertexSet>> parts;
};

WitnessPartition witness_partition(const COCInstance& inst,
                                   const ReduciblePair& pair);

/// Clique on ell + 1 vertices with budget 0.
COCInstance trivial_no_instance(int ell);

/// (G - (X u Y), ell, k - |X|), or the trivial no-instance when the budget
/// would go negative.
COCInstance apply_reduction(const COCInstance& inst, const ReduciblePair& pair);

struct PairSearch {
  std::optional<ReduciblePair> pair;
  Rational lp_objective;
  /// Vertex whose x_v = 1 probe exposed the pair; nullopt if the plain
  /// optimum did.
  std::optional<Vertex> probe_vertex;
  std::size_t probes = 0;
  std::size_t constraints = 0;
};

/// LP-guided search: take the ones and zeros of an optimal solution and
/// look for a pair there; failing that, probe x_v = 1 for each v in
/// ascending order and retry on every probe that keeps the optimum.
PairSearch search_reducible_pair(const COCInstance& inst);

std::optional<ReduciblePair> find_reducible_pair_lp(const COCInstance& inst);

/// Drops every component with at most ell vertices.
Graph drop_small_components(const Graph& g, int ell, VertexSet* removed = nullptr);

struct ReductionStep {
  VertexSet x;
  VertexSet y;
  int k_before = 0;
  int k_after = 0;
  Rational lp_objective;
  std::optional<Vertex> probe_vertex;
  std::size_t lp_constraints = 0;
};

enum class Verdict { kReduced, kTrivialNo };

struct KernelResult {
  COCInstance instance;
  std::vector<ReductionStep> trace;
  Verdict verdict = Verdict::kReduced;
  /// Vertices of components discarded because they were already small.
  VertexSet dropped;
  /// Objective of every LP solved at the top of the loop, in order
  /// (including a final failed search, if any).
  std::vector<Rational> lp_objectives;
};

/// Reduces inst to an equivalent instance on at most 2 ell k vertices
/// (for k >= 1), or to the trivial no-instance.
KernelResult kernelize(const COCInstance& inst);

/// Turns a solution of the kernel into one of the original instance.
VertexSet lift_solution(const KernelResult& result, const VertexSet& kernel_solution);

/// Brute-forces both instances and checks that the answers agree, that the
/// budget did not grow and that the kernel respects the size bound. Throws
/// SolverCapExceeded when either instance exceeds `cap` vertices.
bool verify_kernel(const COCInstance& original, const KernelResult& result,
                   std::size_t cap = kDefaultBruteForceCap);

}  // namespace coc
