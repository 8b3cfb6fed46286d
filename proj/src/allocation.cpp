#include "coc/allocation.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>

namespace coc {

void AllocationProblem::validate() const {
  if (demand.size() != graph.size_a()) {
    throw InputError("demand function must cover side A");
  }
  if (capacity.size() != graph.size_b()) {
    throw InputError("capacity function must cover side B");
  }
  for (Weight w : demand) {
    if (w < 0) throw InputError("negative demand");
  }
  for (Weight w : capacity) {
    if (w < 0) throw InputError("negative capacity");
  }
}

Weight allocated_to(const BipartiteGraph& g, const EdgeWeightFn& f,
                    std::size_t a) {
  Weight total = 0;
  for (std::size_t e : g.edges_at_a(a)) total += f[e];
  return total;
}

Weight allocated_from(const BipartiteGraph& g, const EdgeWeightFn& f,
                      std::size_t b) {
  Weight total = 0;
  for (std::size_t e : g.edges_at_b(b)) total += f[e];
  return total;
}

bool is_edge_weight_fn(const BipartiteGraph& g, const EdgeWeightFn& f) {
  return f.size() == g.num_edges() &&
         std::all_of(f.begin(), f.end(), [](Weight w) { return w >= 0; });
}

bool satisfies_capacities(const BipartiteGraph& g, const EdgeWeightFn& f,
                          std::span<const Weight> capacity) {
  if (!is_edge_weight_fn(g, f) || capacity.size() != g.size_b()) return false;
  for (std::size_t b = 0; b < g.size_b(); ++b) {
    if (allocated_from(g, f, b) > capacity[b]) return false;
  }
  return true;
}

bool satisfies_demands(const BipartiteGraph& g, const EdgeWeightFn& f,
                       std::span<const Weight> demand) {
  if (!is_edge_weight_fn(g, f) || demand.size() != g.size_a()) return false;
  for (std::size_t a = 0; a < g.size_a(); ++a) {
    if (allocated_to(g, f, a) < demand[a]) return false;
  }
  return true;
}

bool is_unsplitting(const BipartiteGraph& g, const EdgeWeightFn& f) {
  if (!is_edge_weight_fn(g, f)) return false;
  for (std::size_t b = 0; b < g.size_b(); ++b) {
    int positive = 0;
    for (std::size_t e : g.edges_at_b(b)) positive += f[e] > 0;
    if (positive > 1) return false;
  }
  return true;
}

Weight max_capacity(std::span<const Weight> capacity) {
  Weight w = 0;
  for (Weight c : capacity) w = std::max(w, c);
  return w;
}

namespace {

// Vertex numbering for the support graph: A-index a -> a, B-index b -> na+b.
struct Support {
  const BipartiteGraph& g;
  std::size_t node_a(std::size_t a) const { return a; }
  std::size_t node_b(std::size_t b) const { return g.size_a() + b; }
  std::size_t nodes() const { return g.size_a() + g.size_b(); }
  std::size_t other(std::size_t e, std::size_t node) const {
    const auto& edge = g.edges()[e];
    return node == node_a(edge.a) ? node_b(edge.b) : node_a(edge.a);
  }
};

struct DisjointSets {
  std::vector<std::size_t> parent;
  explicit DisjointSets(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(std::size_t x, std::size_t y) {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    parent[std::max(x, y)] = std::min(x, y);
    return true;
  }
};

// Returns the edges of one cycle of the positive support, in cyclic order,
// or an empty vector if the support is a forest.
std::vector<std::size_t> find_support_cycle(const BipartiteGraph& g,
                                            const EdgeWeightFn& f) {
  Support s{g};
  DisjointSets sets(s.nodes());
  std::vector<std::vector<std::size_t>> forest(s.nodes());
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    if (f[e] <= 0) continue;
    std::size_t u = s.node_a(g.edges()[e].a);
    std::size_t v = s.node_b(g.edges()[e].b);
    if (sets.unite(u, v)) {
      forest[u].push_back(e);
      forest[v].push_back(e);
      continue;
    }
    // Tree path from v back to u closes the cycle with e.
    constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> via(s.nodes(), kNone);
    std::vector<char> seen(s.nodes(), 0);
    std::deque<std::size_t> queue{v};
    seen[v] = 1;
    while (!queue.empty() && !seen[u]) {
      std::size_t x = queue.front();
      queue.pop_front();
      for (std::size_t t : forest[x]) {
        std::size_t y = s.other(t, x);
        if (seen[y]) continue;
        seen[y] = 1;
        via[y] = t;
        queue.push_back(y);
      }
    }
    std::vector<std::size_t> cycle{e};
    std::vector<std::size_t> back;
    for (std::size_t x = u; x != v; x = s.other(via[x], x)) back.push_back(via[x]);
    // back runs u -> v; the cycle continues from v, so reverse it.
    cycle.insert(cycle.end(), back.rbegin(), back.rend());
    return cycle;
  }
  return {};
}

void require_feasible(const AllocationProblem& p, const EdgeWeightFn& f) {
  p.validate();
  if (!is_edge_weight_fn(p.graph, f)) {
    throw InputError("edge weight function does not match the graph");
  }
  if (!satisfies_capacities(p.graph, f, p.capacity)) {
    throw InputError("edge weight function violates capacities");
  }
  if (!satisfies_demands(p.graph, f, p.demand)) {
    throw InputError("edge weight function violates demands");
  }
}

}  // namespace

bool has_forest_support(const BipartiteGraph& g, const EdgeWeightFn& f) {
  return find_support_cycle(g, f).empty();
}

EdgeWeightFn cancel_cycles(const AllocationProblem& p, const EdgeWeightFn& f) {
  require_feasible(p, f);
  EdgeWeightFn out = f;
  for (;;) {
    std::vector<std::size_t> cycle = find_support_cycle(p.graph, out);
    if (cycle.empty()) return out;
    // Put a minimum-weight edge at the first (odd) position.
    auto min_it = std::min_element(
        cycle.begin(), cycle.end(),
        [&](std::size_t x, std::size_t y) { return out[x] < out[y]; });
    std::rotate(cycle.begin(), min_it, cycle.end());
    const Weight c = out[cycle.front()];
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      out[cycle[i]] += (i % 2 == 0) ? -c : c;
    }
  }
}

EdgeWeightFn round_unsplitting(const AllocationProblem& p,
                               const EdgeWeightFn& f, std::size_t root) {
  require_feasible(p, f);
  const BipartiteGraph& g = p.graph;
  if (root >= g.size_a()) throw InputError("root must be a customer");
  EdgeWeightFn forest = cancel_cycles(p, f);

  Support s{g};
  std::vector<char> seen(s.nodes(), 0);
  EdgeWeightFn h(g.num_edges(), 0);

  auto grow = [&](std::size_t start) {
    std::deque<std::size_t> queue{start};
    seen[start] = 1;
    while (!queue.empty()) {
      std::size_t x = queue.front();
      queue.pop_front();
      auto inc = x < g.size_a() ? g.edges_at_a(x) : g.edges_at_b(x - g.size_a());
      for (std::size_t e : inc) {
        if (forest[e] <= 0) continue;
        std::size_t y = s.other(e, x);
        if (seen[y]) continue;
        seen[y] = 1;
        if (y >= g.size_a()) {
          // x is the parent customer of item y.
          h[e] = p.capacity[y - g.size_a()];
        }
        queue.push_back(y);
      }
    }
  };

  grow(s.node_a(root));
  for (std::size_t a = 0; a < g.size_a(); ++a) {
    if (!seen[s.node_a(a)]) grow(s.node_a(a));
  }
  // Items left unseen have no positive edge and therefore no parent.
  return h;
}

}  // namespace coc
