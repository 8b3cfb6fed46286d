#include "coc/graph.hpp"

#include <algorithm>
#include <functional>
#include <iterator>
#include <sstream>

namespace coc {

VertexSet normalized(VertexSet s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

bool contains(const VertexSet& s, Vertex v) {
  return std::binary_search(s.begin(), s.end(), v);
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::back_inserter(out));
  return out;
}

VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(out));
  return out;
}

VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

bool is_subset(const VertexSet& sub, const VertexSet& super) {
  return std::includes(super.begin(), super.end(), sub.begin(), sub.end());
}

Graph Graph::with_vertices(std::size_t n) {
  Graph g;
  g.present_.assign(n, 1);
  g.adj_.resize(n);
  g.vertices_.resize(n);
  for (std::size_t i = 0; i < n; ++i) g.vertices_[i] = static_cast<Vertex>(i);
  return g;
}

Graph Graph::from_edges(std::size_t n,
                        std::span<const std::pair<Vertex, Vertex>> edges) {
  Graph g = with_vertices(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

void Graph::ensure_id(Vertex v) {
  if (v < 0) throw InputError("negative vertex id " + std::to_string(v));
  auto idx = static_cast<std::size_t>(v);
  if (idx >= present_.size()) {
    present_.resize(idx + 1, 0);
    adj_.resize(idx + 1);
  }
}

void Graph::add_vertex(Vertex v) {
  ensure_id(v);
  auto idx = static_cast<std::size_t>(v);
  if (present_[idx]) return;
  present_[idx] = 1;
  vertices_.insert(std::lower_bound(vertices_.begin(), vertices_.end(), v), v);
}

bool Graph::add_edge(Vertex u, Vertex v) {
  if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
  if (!has_vertex(u) || !has_vertex(v)) {
    throw InputError("edge {" + std::to_string(u) + "," + std::to_string(v) +
                     "} has an endpoint outside the vertex set");
  }
  auto& nu = adj_[static_cast<std::size_t>(u)];
  auto it = std::lower_bound(nu.begin(), nu.end(), v);
  if (it != nu.end() && *it == v) return false;
  nu.insert(it, v);
  auto& nv = adj_[static_cast<std::size_t>(v)];
  nv.insert(std::lower_bound(nv.begin(), nv.end(), u), u);
  ++num_edges_;
  return true;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (!has_vertex(u) || !has_vertex(v)) return false;
  const auto& nu = adj_[static_cast<std::size_t>(u)];
  return std::binary_search(nu.begin(), nu.end(), v);
}

std::span<const Vertex> Graph::neighbors(Vertex v) const {
  if (!has_vertex(v)) throw InputError("unknown vertex " + std::to_string(v));
  return adj_[static_cast<std::size_t>(v)];
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  out.reserve(num_edges_);
  for (Vertex u : vertices_) {
    for (Vertex v : adj_[static_cast<std::size_t>(u)]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

void Graph::require_members(const VertexSet& s, const char* what) const {
  for (Vertex v : s) {
    if (!has_vertex(v)) {
      throw InputError(std::string(what) + ": unknown vertex " +
                       std::to_string(v));
    }
  }
}

Graph Graph::induced(const VertexSet& keep) const {
  require_members(keep, "induced");
  Graph g;
  g.present_.assign(present_.size(), 0);
  g.adj_.resize(present_.size());
  g.vertices_ = normalized(keep);
  for (Vertex v : g.vertices_) g.present_[static_cast<std::size_t>(v)] = 1;
  for (Vertex v : g.vertices_) {
    auto& out = g.adj_[static_cast<std::size_t>(v)];
    for (Vertex w : adj_[static_cast<std::size_t>(v)]) {
      if (g.present_[static_cast<std::size_t>(w)]) out.push_back(w);
    }
    g.num_edges_ += out.size();
  }
  g.num_edges_ /= 2;
  return g;
}

Graph Graph::without(const VertexSet& removed) const {
  return induced(set_difference(vertices_, normalized(removed)));
}

bool operator==(const Graph& a, const Graph& b) {
  if (a.vertices_ != b.vertices_ || a.num_edges_ != b.num_edges_) return false;
  for (Vertex v : a.vertices_) {
    if (a.adj_[static_cast<std::size_t>(v)] !=
        b.adj_[static_cast<std::size_t>(v)]) {
      return false;
    }
  }
  return true;
}

namespace {

// Components of g restricted to vertices with alive[v] set.
std::vector<VertexSet> components_where(const Graph& g,
                                        const std::vector<char>& alive) {
  std::vector<char> seen(g.id_bound(), 0);
  std::vector<VertexSet> out;
  std::vector<Vertex> stack;
  for (Vertex s : g.vertices()) {
    auto si = static_cast<std::size_t>(s);
    if (seen[si] || !alive[si]) continue;
    VertexSet comp;
    seen[si] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      comp.push_back(u);
      for (Vertex w : g.neighbors(u)) {
        auto wi = static_cast<std::size_t>(w);
        if (!seen[wi] && alive[wi]) {
          seen[wi] = 1;
          stack.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

}  // namespace

std::vector<VertexSet> connected_components(const Graph& g) {
  return components_where(g, std::vector<char>(g.id_bound(), 1));
}

VertexSet neighborhood(const Graph& g, const VertexSet& s) {
  g.require_members(s, "neighborhood");
  VertexSet out;
  for (Vertex u : s) {
    for (Vertex w : g.neighbors(u)) {
      if (!contains(s, w)) out.push_back(w);
    }
  }
  return normalized(std::move(out));
}

bool is_connected_set(const Graph& g, const VertexSet& s) {
  if (s.empty()) return false;
  g.require_members(s, "is_connected_set");
  std::vector<char> alive(g.id_bound(), 0);
  for (Vertex v : s) alive[static_cast<std::size_t>(v)] = 1;
  std::vector<char> seen(g.id_bound(), 0);
  std::vector<Vertex> stack{s.front()};
  seen[static_cast<std::size_t>(s.front())] = 1;
  std::size_t reached = 0;
  while (!stack.empty()) {
    Vertex u = stack.back();
    stack.pop_back();
    ++reached;
    for (Vertex w : g.neighbors(u)) {
      auto wi = static_cast<std::size_t>(w);
      if (alive[wi] && !seen[wi]) {
        seen[wi] = 1;
        stack.push_back(w);
      }
    }
  }
  return reached == s.size();
}

std::vector<VertexSet> enumerate_connected_sets(const Graph& g,
                                                std::size_t size) {
  if (size == 0) throw InputError("connected set size must be positive");
  std::vector<VertexSet> out;
  // near[v] counts how many members of the current set are v or adjacent
  // to v; a positive count means v is already "covered" and must not be
  // added to the frontier again.
  std::vector<int> near(g.id_bound(), 0);
  VertexSet current;

  auto touch = [&](Vertex v, int delta) {
    near[static_cast<std::size_t>(v)] += delta;
    for (Vertex w : g.neighbors(v)) near[static_cast<std::size_t>(w)] += delta;
  };

  std::function<void(std::vector<Vertex>, Vertex)> extend =
      [&](std::vector<Vertex> frontier, Vertex root) {
        if (current.size() == size) {
          out.push_back(normalized(current));
          return;
        }
        while (!frontier.empty()) {
          Vertex w = frontier.back();
          frontier.pop_back();
          std::vector<Vertex> next = frontier;
          for (Vertex u : g.neighbors(w)) {
            if (u > root && near[static_cast<std::size_t>(u)] == 0) {
              next.push_back(u);
            }
          }
          current.push_back(w);
          touch(w, 1);
          extend(std::move(next), root);
          touch(w, -1);
          current.pop_back();
        }
      };

  for (Vertex v : g.vertices()) {
    current.assign(1, v);
    touch(v, 1);
    std::vector<Vertex> frontier;
    for (Vertex u : g.neighbors(v)) {
      if (u > v) frontier.push_back(u);
    }
    extend(std::move(frontier), v);
    touch(v, -1);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t largest_component_without(const Graph& g, const VertexSet& s) {
  std::vector<char> alive(g.id_bound(), 1);
  for (Vertex v : s) {
    if (g.has_vertex(v)) alive[static_cast<std::size_t>(v)] = 0;
  }
  std::size_t best = 0;
  for (const auto& c : components_where(g, alive)) best = std::max(best, c.size());
  return best;
}

bool is_coc_solution(const Graph& g, const VertexSet& s, int ell) {
  if (ell < 1) throw InputError("ell must be positive");
  g.require_members(s, "is_coc_solution");
  return largest_component_without(g, s) <= static_cast<std::size_t>(ell);
}

std::string to_string(const VertexSet& s) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
  os << '}';
  return os.str();
}

}  // namespace coc
