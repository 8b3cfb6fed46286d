#include "coc/kernel.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "coc/expansion.hpp"

namespace coc {

ComponentGraph build_component_graph(const Graph& g, const VertexSet& x,
                                     const VertexSet& y) {
  g.require_members(x, "component graph X");
  g.require_members(y, "component graph Y");
  if (!set_intersection(x, y).empty()) {
    throw InputError("component graph needs disjoint X and Y");
  }
  ComponentGraph cg;
  std::vector<VertexSet> comps = connected_components(g.induced(y));
  VertexSet nodes;
  for (const auto& c : comps) nodes.push_back(c.front());
  cg.bipartite = BipartiteGraph(x, nodes);
  // Components come ordered by smallest member, matching node order.
  cg.components = std::move(comps);
  for (std::size_t b = 0; b < cg.components.size(); ++b) {
    const VertexSet& c = cg.components[b];
    cg.weight.push_back(static_cast<Weight>(c.size()));
    for (Vertex v : set_intersection(neighborhood(g, c), x)) {
      cg.bipartite.add_edge_by_index(cg.bipartite.a_index(v), b);
    }
  }
  return cg;
}

namespace {

std::optional<Vertex> strict_vertex(const ComponentGraph& cg,
                                    const EdgeWeightFn& f, int ell) {
  for (std::size_t a = 0; a < cg.bipartite.size_a(); ++a) {
    if (allocated_to(cg.bipartite, f, a) >= 2 * ell) {
      return cg.bipartite.side_a()[a];
    }
  }
  return std::nullopt;
}

bool same_component_graph(const ComponentGraph& a, const ComponentGraph& b) {
  if (a.bipartite.side_a() != b.bipartite.side_a() ||
      a.bipartite.side_b() != b.bipartite.side_b() ||
      a.components != b.components || a.weight != b.weight ||
      a.bipartite.num_edges() != b.bipartite.num_edges()) {
    return false;
  }
  for (const auto& e : a.bipartite.edges()) {
    if (!b.bipartite.find_edge(e.a, e.b)) return false;
  }
  return true;
}

}  // namespace

bool is_reducible_pair(const Graph& g, int ell, const ReduciblePair& pair) {
  if (pair.x.empty()) return false;
  for (const VertexSet* s : {&pair.x, &pair.y}) {
    if (normalized(*s) != *s) return false;
    for (Vertex v : *s) {
      if (!g.has_vertex(v)) return false;
    }
  }
  if (!set_intersection(pair.x, pair.y).empty()) return false;
  if (!is_subset(neighborhood(g, pair.y), pair.x)) return false;
  for (const auto& c : connected_components(g.induced(pair.y))) {
    if (c.size() > static_cast<std::size_t>(ell)) return false;
  }
  if (!same_component_graph(pair.graph,
                            build_component_graph(g, pair.x, pair.y))) {
    return false;
  }
  const BipartiteGraph& bg = pair.graph.bipartite;
  if (!satisfies_capacities(bg, pair.expansion, pair.graph.weight)) return false;
  if (!satisfies_demands(bg, pair.expansion,
                         DemandFn(bg.size_a(), 2 * ell - 1))) {
    return false;
  }
  if (pair.strict_at &&
      allocated_to(bg, pair.expansion, bg.a_index(*pair.strict_at)) < 2 * ell) {
    return false;
  }
  return true;
}

std::optional<ReduciblePair> find_reducible_pair_in(const COCInstance& inst,
                                                    const VertexSet& a,
                                                    const VertexSet& b) {
  const Graph& g = inst.graph;
  const int ell = inst.ell;
  g.require_members(a, "reducible pair search A");
  g.require_members(b, "reducible pair search B");
  if (!set_intersection(a, b).empty()) {
    throw InputError("reducible pair search needs disjoint A and B");
  }
  VertexSet usable;
  for (const auto& c : connected_components(g.induced(b))) {
    if (c.size() <= static_cast<std::size_t>(ell) &&
        is_subset(neighborhood(g, c), a)) {
      usable = set_union(usable, c);
    }
  }
  if (a.empty() || usable.empty()) return std::nullopt;

  ComponentGraph cg = build_component_graph(g, a, usable);
  auto found = weighted_q_expansion_pair(cg.bipartite, 2 * ell - 1, cg.weight);
  if (!found) return std::nullopt;

  VertexSet y;
  for (Vertex node : found->y) y = set_union(y, cg.component_of(node));
  ReduciblePair pair;
  pair.x = found->x;
  pair.y = std::move(y);
  pair.graph = build_component_graph(g, pair.x, pair.y);
  pair.expansion =
      transfer_weights(cg.bipartite, found->assignment, pair.graph.bipartite);
  pair.strict_at = strict_vertex(pair.graph, pair.expansion, ell);
  return pair;
}

WitnessPartition witness_partition(const COCInstance& inst,
                                   const ReduciblePair& pair) {
  const int ell = inst.ell;
  if (!is_reducible_pair(inst.graph, ell, pair)) {
    throw InputError("witness partition needs a valid reducible pair");
  }
  const BipartiteGraph& bg = pair.graph.bipartite;
  for (std::size_t b = 0; b < bg.size_b(); ++b) {
    if (bg.edges_at_b(b).empty()) {
      throw InputError("component " + to_string(pair.graph.components[b]) +
                       " has no neighbor in X");
    }
  }
  Vertex root = pair.strict_at.value_or(pair.x.front());
  EdgeWeightFn f =
      strictify(bg, pair.expansion, pair.graph.weight, 2 * ell - 1, root);
  for (std::size_t b = 0; b < bg.size_b(); ++b) {
    if (allocated_from(bg, f, b) == 0) {
      f[bg.edges_at_b(b).front()] = pair.graph.weight[b];
    }
  }

  WitnessPartition out;
  for (std::size_t a = 0; a < bg.size_a(); ++a) {
    VertexSet part{bg.side_a()[a]};
    for (std::size_t e : bg.edges_at_a(a)) {
      if (f[e] > 0) part = set_union(part, pair.graph.components[bg.edges()[e].b]);
    }
    if (part.size() < static_cast<std::size_t>(ell) + 1) {
      throw std::logic_error("witness part " + to_string(part) + " is too small");
    }
    out.parts.emplace_back(bg.side_a()[a], std::move(part));
  }
  return out;
}

COCInstance trivial_no_instance(int ell) {
  if (ell < 1) throw InputError("ell must be positive");
  COCInstance inst;
  inst.graph = Graph::with_vertices(static_cast<std::size_t>(ell) + 1);
  for (Vertex u = 0; u <= ell; ++u) {
    for (Vertex v = u + 1; v <= ell; ++v) inst.graph.add_edge(u, v);
  }
  inst.ell = ell;
  inst.k = 0;
  return inst;
}

COCInstance apply_reduction(const COCInstance& inst, const ReduciblePair& pair) {
  const int k = inst.k - static_cast<int>(pair.x.size());
  if (k < 0) return trivial_no_instance(inst.ell);
  return COCInstance{inst.graph.without(set_union(pair.x, pair.y)), inst.ell, k};
}

PairSearch search_reducible_pair(const COCInstance& inst) {
  PairSearch out;
  LPInstance lp = build_coc_lp(inst.graph, inst.ell);
  out.constraints = lp.constraints.size();
  LpSession session(std::move(lp));
  out.lp_objective = session.solution().objective;

  auto try_solution = [&](const LPSolution& sol) -> std::optional<ReduciblePair> {
    auto [ones, zeros] = ones_and_zeros(sol);
    if (ones.empty() || zeros.empty()) return std::nullopt;
    return find_reducible_pair_in(inst, ones, zeros);
  };

  out.pair = try_solution(session.solution());
  if (out.pair) return out;
  for (Vertex v : inst.graph.vertices()) {
    ++out.probes;
    LPSolution probe = session.probe_fixed_one(v);
    if (probe.objective != out.lp_objective) continue;
    out.pair = try_solution(probe);
    if (out.pair) {
      out.probe_vertex = v;
      return out;
    }
  }
  return out;
}

std::optional<ReduciblePair> find_reducible_pair_lp(const COCInstance& inst) {
  return search_reducible_pair(inst).pair;
}

Graph drop_small_components(const Graph& g, int ell, VertexSet* removed) {
  VertexSet small;
  for (const auto& c : connected_components(g)) {
    if (c.size() <= static_cast<std::size_t>(ell)) small = set_union(small, c);
  }
  if (removed) *removed = set_union(*removed, small);
  return small.empty() ? g : g.without(small);
}

KernelResult kernelize(const COCInstance& inst) {
  if (inst.ell < 1) throw InputError("ell must be positive");
  const int ell = inst.ell;
  KernelResult result;
  if (inst.k < 0) {
    result.instance = trivial_no_instance(ell);
    result.verdict = Verdict::kTrivialNo;
    return result;
  }
  Graph g = drop_small_components(inst.graph, ell, &result.dropped);
  int k = inst.k;

  auto finish = [&](bool trivial_no) {
    if (trivial_no) {
      result.instance = trivial_no_instance(ell);
      result.verdict = Verdict::kTrivialNo;
    } else {
      result.instance = COCInstance{std::move(g), ell, k};
      result.verdict = Verdict::kReduced;
    }
    return result;
  };

  for (;;) {
    // Every remaining component needs a deletion, so with no budget left
    // the answer is decided by emptiness.
    if (k == 0) return finish(!g.empty());
    if (g.num_vertices() < 2 * static_cast<std::size_t>(ell) * static_cast<std::size_t>(k)) {
      return finish(false);
    }
    COCInstance current{g, ell, k};
    PairSearch search = search_reducible_pair(current);
    result.lp_objectives.push_back(search.lp_objective);
    if (!search.pair) return finish(true);

    const ReduciblePair& pair = *search.pair;
    ReductionStep step;
    step.x = pair.x;
    step.y = pair.y;
    step.k_before = k;
    step.k_after = k - static_cast<int>(pair.x.size());
    step.lp_objective = search.lp_objective;
    step.probe_vertex = search.probe_vertex;
    step.lp_constraints = search.constraints;
    result.trace.push_back(step);
    if (step.k_after < 0) return finish(true);

    COCInstance next = apply_reduction(current, pair);
    g = drop_small_components(next.graph, ell, &result.dropped);
    k = next.k;
  }
}

VertexSet lift_solution(const KernelResult& result,
                        const VertexSet& kernel_solution) {
  VertexSet s = normalized(kernel_solution);
  for (const auto& step : result.trace) s = set_union(s, step.x);
  return s;
}

bool verify_kernel(const COCInstance& original, const KernelResult& result,
                   std::size_t cap) {
  const COCInstance& reduced = result.instance;
  if (original.graph.num_vertices() > cap || reduced.graph.num_vertices() > cap) {
    throw SolverCapExceeded("verification needs both instances within the cap");
  }
  const bool before = brute_force_solve(original, cap).yes;
  const bool after = brute_force_solve(reduced, cap).yes;
  if (before != after) return false;
  if (reduced.k > std::max(original.k, 0)) return false;
  const std::size_t bound = 2 * static_cast<std::size_t>(original.ell) *
                            static_cast<std::size_t>(std::max(original.k, 0));
  if (reduced.graph.num_vertices() > bound) {
    // A no-instance needs at least ell + 1 vertices, which a zero budget
    // cannot accommodate.
    return result.verdict == Verdict::kTrivialNo && original.k <= 0;
  }
  return true;
}

}  // namespace coc
