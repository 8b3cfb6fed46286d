#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace coc {

/// Raised when an operation receives arguments that violate its contract
/// (unknown vertex ids, overlapping sides, unmet preconditions).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

using Vertex = int;

/// Sorted, duplicate-free list of vertex ids.
using VertexSet = std::vector<Vertex>;

/// Sorts and deduplicates in place; returns the normalized set.
VertexSet normalized(VertexSet s);

bool contains(const VertexSet& s, Vertex v);
VertexSet set_union(const VertexSet& a, const VertexSet& b);
VertexSet set_difference(const VertexSet& a, const VertexSet& b);
VertexSet set_intersection(const VertexSet& a, const VertexSet& b);
bool is_subset(const VertexSet& sub, const VertexSet& super);

/// Undirected simple graph over non-negative integer ids.
///
/// Ids are never renamed: induced subgraphs and deletions keep the
/// surviving vertices under their original ids, so the id space of a
/// derived graph can be sparse.
class Graph {
 public:
  Graph() = default;

  /// Graph on vertices 0..n-1 with no edges.
  static Graph with_vertices(std::size_t n);
  static Graph from_edges(std::size_t n,
                          std::span<const std::pair<Vertex, Vertex>> edges);

  void add_vertex(Vertex v);
  /// Returns false if the edge already existed. Self-loops and unknown
  /// endpoints are rejected.
  bool add_edge(Vertex u, Vertex v);

  bool has_vertex(Vertex v) const {
    return v >= 0 && static_cast<std::size_t>(v) < present_.size() &&
           present_[static_cast<std::size_t>(v)];
  }
  bool has_edge(Vertex u, Vertex v) const;

  /// Neighbors of v in ascending id order.
  std::span<const Vertex> neighbors(Vertex v) const;
  std::size_t degree(Vertex v) const { return neighbors(v).size(); }

  const VertexSet& vertices() const { return vertices_; }
  std::size_t num_vertices() const { return vertices_.size(); }
  std::size_t num_edges() const { return num_edges_; }
  bool empty() const { return vertices_.empty(); }

  /// One past the largest id ever used; ids are < id_bound().
  std::size_t id_bound() const { return present_.size(); }

  /// Edges (u, v) with u < v, lexicographically ordered.
  std::vector<std::pair<Vertex, Vertex>> edges() const;

  Graph induced(const VertexSet& keep) const;
  Graph without(const VertexSet& removed) const;

  /// Throws InputError unless every member of s is a vertex.
  void require_members(const VertexSet& s, const char* what) const;

  friend bool operator==(const Graph& a, const Graph& b);

 private:
  void ensure_id(Vertex v);

  VertexSet vertices_;
  std::vector<char> present_;
  std::vector<std::vector<Vertex>> adj_;
  std::size_t num_edges_ = 0;
};

/// Maximal connected vertex sets, ordered by smallest member.
std::vector<VertexSet> connected_components(const Graph& g);

/// N(s): vertices outside s adjacent to some member of s.
VertexSet neighborhood(const Graph& g, const VertexSet& s);

/// True iff s is nonempty and g[s] is connected.
bool is_connected_set(const Graph& g, const VertexSet& s);

/// All vertex sets of exactly `size` vertices inducing a connected
/// subgraph, each reported once, sorted lexicographically.
///
/// Sets are grown from their smallest member; a vertex enters the
/// extension frontier only if it exceeds the root and is not adjacent to
/// the set built so far, which makes every set reachable along exactly
/// one path.
std::vector<VertexSet> enumerate_connected_sets(const Graph& g,
                                                std::size_t size);

/// True iff every component of g - s has at most ell vertices.
bool is_coc_solution(const Graph& g, const VertexSet& s, int ell);

/// Size of the largest component of g - s.
std::size_t largest_component_without(const Graph& g, const VertexSet& s);

std::string to_string(const VertexSet& s);

}  // namespace coc
