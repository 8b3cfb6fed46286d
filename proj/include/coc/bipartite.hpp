#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "coc/graph.hpp"

namespace coc {

using Weight = std::int64_t;

enum class Side { A, B };

/// Bipartite graph ((A, B), E) with caller-chosen ids on both sides.
///
/// Sides are stored as sorted id lists; algorithms work with positions
/// ("indices") into those lists. Edges are numbered in insertion order and
/// the edge number is how edge weight functions address them.
class BipartiteGraph {
 public:
  struct Edge {
    std::size_t a;  // index into side_a()
    std::size_t b;  // index into side_b()
  };

  BipartiteGraph() = default;
  /// Throws InputError if the two sides share an id.
  BipartiteGraph(VertexSet side_a, VertexSet side_b);

  /// Adds the edge between ids a_id in A and b_id in B. Returns false on a
  /// duplicate. Throws InputError for unknown ids.
  bool add_edge(Vertex a_id, Vertex b_id);
  bool add_edge_by_index(std::size_t a, std::size_t b);

  const VertexSet& side_a() const { return side_a_; }
  const VertexSet& side_b() const { return side_b_; }
  std::size_t size_a() const { return side_a_.size(); }
  std::size_t size_b() const { return side_b_.size(); }

  std::size_t a_index(Vertex id) const;
  std::size_t b_index(Vertex id) const;
  std::optional<std::size_t> find_a(Vertex id) const;
  std::optional<std::size_t> find_b(Vertex id) const;

  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t num_edges() const { return edges_.size(); }
  /// Edge numbers incident to A-index a, ordered by B-index.
  std::span<const std::size_t> edges_at_a(std::size_t a) const {
    return inc_a_[a];
  }
  /// Edge numbers incident to B-index b, ordered by A-index.
  std::span<const std::size_t> edges_at_b(std::size_t b) const {
    return inc_b_[b];
  }
  std::optional<std::size_t> find_edge(std::size_t a, std::size_t b) const;

  /// N(X) for X given as A-ids; result as B-ids.
  VertexSet neighbors_of_a(const VertexSet& a_ids) const;
  /// N(Y) for Y given as B-ids; result as A-ids.
  VertexSet neighbors_of_b(const VertexSet& b_ids) const;

  /// The subgraph induced on the given ids (edges renumbered in order).
  BipartiteGraph induced(const VertexSet& a_ids, const VertexSet& b_ids) const;

 private:
  VertexSet side_a_;
  VertexSet side_b_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> inc_a_;
  std::vector<std::vector<std::size_t>> inc_b_;
};

/// Edge numbers of a matching in some host BipartiteGraph.
struct Matching {
  std::vector<std::size_t> edges;
  std::size_t size() const { return edges.size(); }
};

/// Maximum-cardinality matching (Hopcroft-Karp). Search order follows
/// vertex indices, so equal inputs give equal matchings.
Matching max_matching(const BipartiteGraph& g);

/// True iff the edge numbers form a matching of g.
bool is_matching(const BipartiteGraph& g, const Matching& m);

/// A nonempty X within side A with |N(X)| < q|X|, or nullopt when A has a
/// q-expansion into B.
std::optional<VertexSet> hall_violator(const BipartiteGraph& g, int q);

/// Bipartite graph in which each vertex v of one side is replaced by
/// weight(v) copies with the neighborhood of v.
///
/// The untouched side keeps its ids. Copies receive fresh ids above every
/// id of the input, numbered consecutively by (origin, copy).
struct TwinGraph {
  BipartiteGraph graph;
  Side twinned = Side::B;
  /// For each index on the twinned side, the index of its origin in the
  /// input graph's corresponding side.
  std::vector<std::size_t> origin;
  /// First twin index of each origin index; twins of origin i occupy
  /// [first_twin[i], first_twin[i + 1]).
  std::vector<std::size_t> first_twin;
};

/// `weights` is aligned with the chosen side (weights[i] for index i) and
/// must be positive.
TwinGraph build_twin_graph(const BipartiteGraph& g, Side side,
                           std::span<const Weight> weights);

}  // namespace coc
