#include "coc/bipartite.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <string>

namespace coc {

BipartiteGraph::BipartiteGraph(VertexSet side_a, VertexSet side_b)
    : side_a_(normalized(std::move(side_a))),
      side_b_(normalized(std::move(side_b))) {
  if (!set_intersection(side_a_, side_b_).empty()) {
    throw InputError("bipartite sides must be disjoint");
  }
  inc_a_.resize(side_a_.size());
  inc_b_.resize(side_b_.size());
}

std::optional<std::size_t> BipartiteGraph::find_a(Vertex id) const {
  auto it = std::lower_bound(side_a_.begin(), side_a_.end(), id);
  if (it == side_a_.end() || *it != id) return std::nullopt;
  return static_cast<std::size_t>(it - side_a_.begin());
}

std::optional<std::size_t> BipartiteGraph::find_b(Vertex id) const {
  auto it = std::lower_bound(side_b_.begin(), side_b_.end(), id);
  if (it == side_b_.end() || *it != id) return std::nullopt;
  return static_cast<std::size_t>(it - side_b_.begin());
}

std::size_t BipartiteGraph::a_index(Vertex id) const {
  if (auto i = find_a(id)) return *i;
  throw InputError("vertex " + std::to_string(id) + " is not on side A");
}

std::size_t BipartiteGraph::b_index(Vertex id) const {
  if (auto i = find_b(id)) return *i;
  throw InputError("vertex " + std::to_string(id) + " is not on side B");
}

bool BipartiteGraph::add_edge(Vertex a_id, Vertex b_id) {
  return add_edge_by_index(a_index(a_id), b_index(b_id));
}

bool BipartiteGraph::add_edge_by_index(std::size_t a, std::size_t b) {
  if (a >= side_a_.size() || b >= side_b_.size()) {
    throw InputError("bipartite edge index out of range");
  }
  auto& ia = inc_a_[a];
  auto pos_a = std::lower_bound(
      ia.begin(), ia.end(), b,
      [&](std::size_t e, std::size_t key) { return edges_[e].b < key; });
  if (pos_a != ia.end() && edges_[*pos_a].b == b) return false;
  std::size_t e = edges_.size();
  edges_.push_back({a, b});
  ia.insert(pos_a, e);
  auto& ib = inc_b_[b];
  auto pos_b = std::lower_bound(
      ib.begin(), ib.end(), a,
      [&](std::size_t f, std::size_t key) { return edges_[f].a < key; });
  ib.insert(pos_b, e);
  return true;
}

std::optional<std::size_t> BipartiteGraph::find_edge(std::size_t a,
                                                     std::size_t b) const {
  for (std::size_t e : inc_a_.at(a)) {
    if (edges_[e].b == b) return e;
  }
  return std::nullopt;
}

VertexSet BipartiteGraph::neighbors_of_a(const VertexSet& a_ids) const {
  VertexSet out;
  for (Vertex id : a_ids) {
    for (std::size_t e : inc_a_[a_index(id)]) out.push_back(side_b_[edges_[e].b]);
  }
  return normalized(std::move(out));
}

VertexSet BipartiteGraph::neighbors_of_b(const VertexSet& b_ids) const {
  VertexSet out;
  for (Vertex id : b_ids) {
    for (std::size_t e : inc_b_[b_index(id)]) out.push_back(side_a_[edges_[e].a]);
  }
  return normalized(std::move(out));
}

BipartiteGraph BipartiteGraph::induced(const VertexSet& a_ids,
                                       const VertexSet& b_ids) const {
  BipartiteGraph h(a_ids, b_ids);
  for (const Edge& e : edges_) {
    auto a = h.find_a(side_a_[e.a]);
    auto b = h.find_b(side_b_[e.b]);
    if (a && b) h.add_edge_by_index(*a, *b);
  }
  for (Vertex id : h.side_a_) (void)a_index(id);
  for (Vertex id : h.side_b_) (void)b_index(id);
  return h;
}

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

struct MateState {
  std::vector<std::size_t> mate_a;  // matched edge at each A-index
  std::vector<std::size_t> mate_b;
};

// Hopcroft-Karp on indices; mates hold edge numbers (kNone if free).
MateState hopcroft_karp(const BipartiteGraph& g) {
  const std::size_t na = g.size_a();
  const std::size_t nb = g.size_b();
  const auto& edges = g.edges();
  MateState st{std::vector<std::size_t>(na, kNone),
               std::vector<std::size_t>(nb, kNone)};
  constexpr std::size_t kInf = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> dist(na);
  std::vector<std::size_t> cursor(na);

  auto bfs = [&]() {
    std::deque<std::size_t> queue;
    bool found = false;
    for (std::size_t a = 0; a < na; ++a) {
      if (st.mate_a[a] == kNone) {
        dist[a] = 0;
        queue.push_back(a);
      } else {
        dist[a] = kInf;
      }
    }
    while (!queue.empty()) {
      std::size_t a = queue.front();
      queue.pop_front();
      for (std::size_t e : g.edges_at_a(a)) {
        std::size_t mb = st.mate_b[edges[e].b];
        if (mb == kNone) {
          found = true;
        } else {
          std::size_t next = edges[mb].a;
          if (dist[next] == kInf) {
            dist[next] = dist[a] + 1;
            queue.push_back(next);
          }
        }
      }
    }
    return found;
  };

  // Iterative DFS along the layered graph.
  auto augment_from = [&](std::size_t root) {
    std::vector<std::size_t> path_a{root};
    std::vector<std::size_t> path_e;
    while (!path_a.empty()) {
      std::size_t a = path_a.back();
      auto inc = g.edges_at_a(a);
      bool advanced = false;
      while (cursor[a] < inc.size()) {
        std::size_t e = inc[cursor[a]++];
        std::size_t mb = st.mate_b[edges[e].b];
        if (mb == kNone) {
          path_e.push_back(e);
          // Flip the path.
          for (std::size_t i = 0; i < path_e.size(); ++i) {
            std::size_t f = path_e[i];
            st.mate_a[edges[f].a] = f;
            st.mate_b[edges[f].b] = f;
          }
          return true;
        }
        std::size_t next = edges[mb].a;
        if (dist[next] == dist[a] + 1) {
          path_e.push_back(e);
          path_a.push_back(next);
          advanced = true;
          break;
        }
      }
      if (!advanced) {
        dist[a] = kInf;
        path_a.pop_back();
        if (!path_e.empty()) path_e.pop_back();
      }
    }
    return false;
  };

  while (bfs()) {
    std::fill(cursor.begin(), cursor.end(), 0);
    for (std::size_t a = 0; a < na; ++a) {
      if (st.mate_a[a] == kNone) augment_from(a);
    }
  }
  return st;
}

}  // namespace

Matching max_matching(const BipartiteGraph& g) {
  MateState st = hopcroft_karp(g);
  Matching m;
  for (std::size_t e : st.mate_a) {
    if (e != kNone) m.edges.push_back(e);
  }
  std::sort(m.edges.begin(), m.edges.end());
  return m;
}

bool is_matching(const BipartiteGraph& g, const Matching& m) {
  std::vector<char> used_a(g.size_a(), 0);
  std::vector<char> used_b(g.size_b(), 0);
  for (std::size_t e : m.edges) {
    if (e >= g.num_edges()) return false;
    const auto& edge = g.edges()[e];
    if (used_a[edge.a] || used_b[edge.b]) return false;
    used_a[edge.a] = used_b[edge.b] = 1;
  }
  return true;
}

TwinGraph build_twin_graph(const BipartiteGraph& g, Side side,
                           std::span<const Weight> weights) {
  const std::size_t n_side = side == Side::A ? g.size_a() : g.size_b();
  if (weights.size() != n_side) {
    throw InputError("twin weights must cover the whole side");
  }
  Vertex next_id = 0;
  for (Vertex v : g.side_a()) next_id = std::max(next_id, v + 1);
  for (Vertex v : g.side_b()) next_id = std::max(next_id, v + 1);

  TwinGraph t;
  t.twinned = side;
  t.first_twin.reserve(n_side + 1);
  VertexSet twin_ids;
  for (std::size_t i = 0; i < n_side; ++i) {
    if (weights[i] < 1) {
      throw InputError("twin multiplicity must be positive (index " +
                       std::to_string(i) + ")");
    }
    t.first_twin.push_back(twin_ids.size());
    for (Weight c = 0; c < weights[i]; ++c) {
      twin_ids.push_back(next_id++);
      t.origin.push_back(i);
    }
  }
  t.first_twin.push_back(twin_ids.size());

  if (side == Side::B) {
    t.graph = BipartiteGraph(g.side_a(), twin_ids);
    for (std::size_t a = 0; a < g.size_a(); ++a) {
      for (std::size_t e : g.edges_at_a(a)) {
        std::size_t b = g.edges()[e].b;
        for (std::size_t j = t.first_twin[b]; j < t.first_twin[b + 1]; ++j) {
          t.graph.add_edge_by_index(a, j);
        }
      }
    }
  } else {
    t.graph = BipartiteGraph(twin_ids, g.side_b());
    for (std::size_t j = 0; j < twin_ids.size(); ++j) {
      for (std::size_t e : g.edges_at_a(t.origin[j])) {
        t.graph.add_edge_by_index(j, g.edges()[e].b);
      }
    }
  }
  return t;
}

std::optional<VertexSet> hall_violator(const BipartiteGraph& g, int q) {
  if (q < 1) throw InputError("q must be positive");
  std::vector<Weight> mult(g.size_a(), q);
  if (g.size_a() == 0) return std::nullopt;
  TwinGraph t = build_twin_graph(g, Side::A, mult);
  MateState st = hopcroft_karp(t.graph);
  const auto& edges = t.graph.edges();

  std::size_t start = kNone;
  for (std::size_t j = 0; j < st.mate_a.size(); ++j) {
    if (st.mate_a[j] == kNone) {
      start = j;
      break;
    }
  }
  if (start == kNone) return std::nullopt;

  // Alternating search: A-twin --(any edge)--> B --(matched edge)--> A-twin.
  std::vector<char> seen_a(t.graph.size_a(), 0);
  std::vector<char> seen_b(t.graph.size_b(), 0);
  std::deque<std::size_t> queue{start};
  seen_a[start] = 1;
  VertexSet x;
  while (!queue.empty()) {
    std::size_t a = queue.front();
    queue.pop_front();
    x.push_back(g.side_a()[t.origin[a]]);
    for (std::size_t e : t.graph.edges_at_a(a)) {
      std::size_t b = edges[e].b;
      if (seen_b[b]) continue;
      seen_b[b] = 1;
      // Maximality of the matching means every reachable B is matched.
      std::size_t next = edges[st.mate_b[b]].a;
      if (!seen_a[next]) {
        seen_a[next] = 1;
        queue.push_back(next);
      }
    }
  }
  return normalized(std::move(x));
}

}  // namespace coc
