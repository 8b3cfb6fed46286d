#include "coc/solvers.hpp"

#include <algorithm>
#include <deque>
#include <string>

namespace coc {

SolveOutcome brute_force_solve(const COCInstance& inst, std::size_t cap) {
  if (inst.ell < 1) throw InputError("ell must be positive");
  const Graph& g = inst.graph;
  const std::size_t n = g.num_vertices();
  if (n > cap) {
    throw SolverCapExceeded("brute force refuses " + std::to_string(n) +
                            " vertices (cap " + std::to_string(cap) + ")");
  }
  SolveOutcome out;
  if (inst.k < 0) return out;
  const std::size_t max_size = std::min<std::size_t>(n, static_cast<std::size_t>(inst.k));
  const VertexSet& vs = g.vertices();
  for (std::size_t size = 0; size <= max_size; ++size) {
    // Lexicographic combinations of positions.
    std::vector<std::size_t> pos(size);
    for (std::size_t i = 0; i < size; ++i) pos[i] = i;
    for (;;) {
      VertexSet s;
      s.reserve(size);
      for (std::size_t p : pos) s.push_back(vs[p]);
      ++out.nodes;
      if (is_coc_solution(g, s, inst.ell)) {
        out.yes = true;
        out.witness = std::move(s);
        return out;
      }
      std::size_t i = size;
      while (i > 0 && pos[i - 1] == n - size + i - 1) --i;
      if (i == 0) break;
      ++pos[i - 1];
      for (std::size_t j = i; j < size; ++j) pos[j] = pos[j - 1] + 1;
    }
  }
  return out;
}

namespace {

// First ell + 1 vertices reached by BFS from the smallest vertex of the
// first component with more than ell vertices; empty if there is none.
VertexSet oversized_connected_set(const Graph& g, int ell) {
  const auto limit = static_cast<std::size_t>(ell) + 1;
  for (const auto& comp : connected_components(g)) {
    if (comp.size() < limit) continue;
    std::vector<char> seen(g.id_bound(), 0);
    VertexSet picked;
    std::deque<Vertex> queue{comp.front()};
    seen[static_cast<std::size_t>(comp.front())] = 1;
    while (!queue.empty() && picked.size() < limit) {
      Vertex u = queue.front();
      queue.pop_front();
      picked.push_back(u);
      for (Vertex w : g.neighbors(u)) {
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = 1;
          queue.push_back(w);
        }
      }
    }
    return normalized(std::move(picked));
  }
  return {};
}

bool branch(const Graph& g, int ell, int k, VertexSet& chosen,
            std::size_t& leaves) {
  VertexSet target = oversized_connected_set(g, ell);
  if (target.empty()) {
    ++leaves;
    return true;
  }
  if (k == 0) {
    ++leaves;
    return false;
  }
  for (Vertex v : target) {
    chosen.push_back(v);
    if (branch(g.without({v}), ell, k - 1, chosen, leaves)) return true;
    chosen.pop_back();
  }
  return false;
}

}  // namespace

SolveOutcome branching_solve(const COCInstance& inst) {
  if (inst.ell < 1) throw InputError("ell must be positive");
  SolveOutcome out;
  if (inst.k < 0) return out;
  VertexSet chosen;
  out.yes = branch(inst.graph, inst.ell, inst.k, chosen, out.nodes);
  if (out.yes) out.witness = normalized(std::move(chosen));
  return out;
}

}  // namespace coc
