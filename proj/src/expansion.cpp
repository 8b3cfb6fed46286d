#include "coc/expansion.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

namespace coc {

EdgeWeightFn transfer_weights(const BipartiteGraph& from,
                              const EdgeWeightFn& f,
                              const BipartiteGraph& to) {
  EdgeWeightFn out(to.num_edges(), 0);
  for (std::size_t e = 0; e < from.num_edges(); ++e) {
    if (f[e] == 0) continue;
    const auto& edge = from.edges()[e];
    auto a = to.find_a(from.side_a()[edge.a]);
    auto b = to.find_b(from.side_b()[edge.b]);
    std::optional<std::size_t> target;
    if (a && b) target = to.find_edge(*a, *b);
    if (!target) throw InputError("weighted edge missing from target graph");
    out[*target] += f[e];
  }
  return out;
}

bool is_closed_pair(const BipartiteGraph& g, const ExpansionPair& pair) {
  return is_subset(g.neighbors_of_b(pair.y), pair.x);
}

Weight min_allocation(const BipartiteGraph& g, const ExpansionPair& pair) {
  if (pair.x.empty()) return 0;
  Weight best = std::numeric_limits<Weight>::max();
  for (Vertex id : pair.x) {
    best = std::min(best, allocated_to(g, pair.assignment, g.a_index(id)));
  }
  return best;
}

Weight max_allocation(const BipartiteGraph& g, const ExpansionPair& pair) {
  Weight best = 0;
  for (Vertex id : pair.x) {
    best = std::max(best, allocated_to(g, pair.assignment, g.a_index(id)));
  }
  return best;
}

namespace {

bool has_isolated_b(const BipartiteGraph& g) {
  for (std::size_t b = 0; b < g.size_b(); ++b) {
    if (g.edges_at_b(b).empty()) return true;
  }
  return false;
}

// Assignment on `host` giving weight 1 to each matched (A-twin, item) edge,
// folded onto the twin's origin.
EdgeWeightFn fold_a_twin_matching(const BipartiteGraph& host,
                                  const BipartiteGraph& sub,
                                  const TwinGraph& twin, const Matching& m) {
  EdgeWeightFn on_sub(sub.num_edges(), 0);
  for (std::size_t e : m.edges) {
    const auto& edge = twin.graph.edges()[e];
    auto target = sub.find_edge(twin.origin[edge.a], edge.b);
    on_sub[*target] += 1;
  }
  return transfer_weights(sub, on_sub, host);
}

// Assignment on `host` counting matched twins of each item per customer.
EdgeWeightFn fold_b_twin_weights(const BipartiteGraph& host,
                                 const TwinGraph& twin,
                                 const EdgeWeightFn& on_twin) {
  EdgeWeightFn out(host.num_edges(), 0);
  for (std::size_t e = 0; e < twin.graph.num_edges(); ++e) {
    if (on_twin[e] == 0) continue;
    const auto& edge = twin.graph.edges()[e];
    auto target = host.find_edge(edge.a, twin.origin[edge.b]);
    out[*target] += on_twin[e];
  }
  return out;
}

VertexSet b_origins(const BipartiteGraph& host, const TwinGraph& twin,
                    const BipartiteGraph& twin_host, const VertexSet& twin_ids) {
  VertexSet out;
  for (Vertex id : twin_ids) {
    out.push_back(host.side_b()[twin.origin[twin_host.b_index(id)]]);
  }
  return normalized(std::move(out));
}

}  // namespace

ExpansionPair expansion_lemma(const BipartiteGraph& g, int q) {
  if (q < 1) throw InputError("q must be positive");
  if (g.size_a() == 0) throw InputError("expansion lemma needs nonempty A");
  if (g.size_b() < static_cast<std::size_t>(q) * g.size_a()) {
    throw InputError("expansion lemma needs |B| >= q|A|");
  }
  if (has_isolated_b(g)) {
    throw InputError("expansion lemma forbids isolated vertices in B");
  }

  VertexSet a = g.side_a();
  VertexSet b = g.side_b();
  for (;;) {
    BipartiteGraph sub = g.induced(a, b);
    auto violator = hall_violator(sub, q);
    if (!violator) break;
    b = set_difference(b, sub.neighbors_of_a(*violator));
    a = set_difference(a, *violator);
  }
  if (a.empty()) {
    throw std::logic_error("expansion lemma peeled away all of A");
  }

  BipartiteGraph sub = g.induced(a, b);
  TwinGraph twin = build_twin_graph(sub, Side::A,
                                    std::vector<Weight>(sub.size_a(), q));
  Matching m = max_matching(twin.graph);
  if (m.size() != twin.graph.size_a()) {
    throw std::logic_error("no saturating matching after peeling violators");
  }
  return ExpansionPair{a, b, fold_a_twin_matching(g, sub, twin, m)};
}

std::optional<ExpansionPair> find_q_expansion_pair(const BipartiteGraph& g,
                                                   int q) {
  if (q < 1) throw InputError("q must be positive");
  VertexSet a = g.side_a();
  VertexSet b = g.side_b();
  // Every surviving item only sees surviving customers, so neighborhoods
  // in `sub` agree with neighborhoods in g.
  while (!a.empty() && !b.empty()) {
    BipartiteGraph sub = g.induced(a, b);
    TwinGraph twin = build_twin_graph(sub, Side::A,
                                      std::vector<Weight>(sub.size_a(), q));
    Matching m = max_matching(twin.graph);

    std::vector<int> matched_copies(sub.size_a(), 0);
    for (std::size_t e : m.edges) {
      ++matched_copies[twin.origin[twin.graph.edges()[e].a]];
    }
    VertexSet kept;
    for (std::size_t i = 0; i < sub.size_a(); ++i) {
      if (matched_copies[i] >= q) kept.push_back(sub.side_a()[i]);
    }
    if (kept.empty()) return std::nullopt;

    Matching kept_edges;
    VertexSet partners;
    for (std::size_t e : m.edges) {
      const auto& edge = twin.graph.edges()[e];
      if (matched_copies[twin.origin[edge.a]] >= q) {
        kept_edges.edges.push_back(e);
        partners.push_back(sub.side_b()[edge.b]);
      }
    }
    partners = normalized(std::move(partners));
    if (is_subset(sub.neighbors_of_b(partners), kept)) {
      return ExpansionPair{kept, partners,
                           fold_a_twin_matching(g, sub, twin, kept_edges)};
    }
    VertexSet dropped = set_difference(a, kept);
    b = set_difference(b, sub.neighbors_of_a(dropped));
    a = std::move(kept);
  }
  return std::nullopt;
}

std::optional<ExpansionPair> weighted_q_expansion_pair(const BipartiteGraph& g,
                                                       int q,
                                                       const CapacityFn& cap) {
  if (cap.size() != g.size_b()) {
    throw InputError("capacity function must cover side B");
  }
  TwinGraph twin = build_twin_graph(g, Side::B, cap);
  auto found = find_q_expansion_pair(twin.graph, q);
  if (!found) return std::nullopt;
  return ExpansionPair{
      found->x, b_origins(g, twin, twin.graph, found->y),
      fold_b_twin_weights(g, twin, found->assignment)};
}

EdgeWeightFn strictify(const BipartiteGraph& g, const EdgeWeightFn& f,
                       const CapacityFn& cap, int q,
                       std::optional<Vertex> root) {
  if (q < 1) throw InputError("q must be positive");
  if (g.size_a() == 0) throw InputError("strictify needs a customer");
  AllocationProblem p{g, DemandFn(g.size_a(), q), cap};
  std::size_t r = root ? g.a_index(*root) : 0;
  // round_unsplitting validates that f is a weighted q-expansion.
  return round_unsplitting(p, f, r);
}

ExpansionPair weighted_expansion_lemma(const BipartiteGraph& g, int q, int W,
                                       const CapacityFn& cap) {
  if (q < 1 || W < 1) throw InputError("q and W must be positive");
  if (g.size_a() == 0) throw InputError("expansion lemma needs nonempty A");
  if (cap.size() != g.size_b()) {
    throw InputError("capacity function must cover side B");
  }
  Weight total = 0;
  for (Weight c : cap) {
    if (c < 1 || c > W) {
      throw InputError("capacities must lie in [1, W]");
    }
    total += c;
  }
  const int level = q + W - 1;
  if (total < static_cast<Weight>(level) * static_cast<Weight>(g.size_a())) {
    throw InputError("total capacity must be at least (q + W - 1)|A|");
  }
  if (has_isolated_b(g)) {
    throw InputError("expansion lemma forbids isolated vertices in B");
  }

  TwinGraph twin = build_twin_graph(g, Side::B, cap);
  ExpansionPair unweighted = expansion_lemma(twin.graph, level);
  ExpansionPair pair{unweighted.x,
                     b_origins(g, twin, twin.graph, unweighted.y),
                     fold_b_twin_weights(g, twin, unweighted.assignment)};

  BipartiteGraph sub = g.induced(pair.x, pair.y);
  CapacityFn sub_cap(sub.size_b());
  for (std::size_t b = 0; b < sub.size_b(); ++b) {
    sub_cap[b] = cap[g.b_index(sub.side_b()[b])];
  }
  EdgeWeightFn splitting = transfer_weights(g, pair.assignment, sub);
  EdgeWeightFn rounded = strictify(sub, splitting, sub_cap, level);
  pair.assignment = transfer_weights(sub, rounded, g);
  return pair;
}

}  // namespace coc
