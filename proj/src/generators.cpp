#include "coc/generators.hpp"

#include <algorithm>

namespace coc {

Graph erdos_renyi(std::size_t n, double p, Rng& rng) {
  Graph g = Graph::with_vertices(n);
  std::bernoulli_distribution coin(p);
  for (Vertex u = 0; static_cast<std::size_t>(u) < n; ++u) {
    for (Vertex v = u + 1; static_cast<std::size_t>(v) < n; ++v) {
      if (coin(rng)) g.add_edge(u, v);
    }
  }
  return g;
}

namespace {

int uniform(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

class Builder {
 public:
  Vertex add() { return static_cast<Vertex>(count_++); }

  // A path on `size` new vertices; returns its vertices.
  std::vector<Vertex> path(int size) {
    std::vector<Vertex> out;
    for (int i = 0; i < size; ++i) {
      out.push_back(add());
      if (i > 0) link(out[i - 1], out[i]);
    }
    return out;
  }

  void link(Vertex u, Vertex v) {
    if (u != v) edges_.emplace_back(std::min(u, v), std::max(u, v));
  }

  Graph build() const {
    Graph g = Graph::with_vertices(count_);
    for (auto [u, v] : edges_) g.add_edge(u, v);
    return g;
  }

  std::size_t size() const { return count_; }

 private:
  std::size_t count_ = 0;
  std::vector<std::pair<Vertex, Vertex>> edges_;
};

}  // namespace

Graph gadget_union(std::size_t max_n, int ell, Rng& rng) {
  Builder b;
  auto left = [&] { return static_cast<int>(max_n - b.size()); };
  std::vector<Vertex> anchors;
  while (left() > 0) {
    const int kind = uniform(rng, 0, 3);
    if (kind <= 1 && left() >= 3) {
      // One or two hubs with pendant components of size <= ell.
      const int hubs = (kind == 1 && left() >= 4) ? 2 : 1;
      std::vector<Vertex> centers;
      for (int h = 0; h < hubs; ++h) centers.push_back(b.add());
      anchors.push_back(centers.front());
      if (hubs == 2 && uniform(rng, 0, 1)) b.link(centers[0], centers[1]);
      const int pendants = uniform(rng, 1, 2 * ell + 1) * hubs;
      for (int i = 0; i < pendants && left() > 0; ++i) {
        const int size = std::min(uniform(rng, 1, ell), left());
        std::vector<Vertex> comp = b.path(size);
        const int which = uniform(rng, 0, hubs == 2 ? 2 : 0);
        const Vertex touch = comp[static_cast<std::size_t>(uniform(rng, 0, size - 1))];
        if (which == 0 || which == 2) b.link(centers[0], touch);
        if (which == 1 || which == 2) b.link(centers[1], comp.front());
      }
    } else if (kind == 2) {
      const int size = std::min(uniform(rng, ell + 1, ell + 2), left());
      std::vector<Vertex> clique;
      for (int i = 0; i < size; ++i) clique.push_back(b.add());
      for (std::size_t i = 0; i < clique.size(); ++i) {
        for (std::size_t j = i + 1; j < clique.size(); ++j) b.link(clique[i], clique[j]);
      }
      anchors.push_back(clique.front());
    } else {
      const int size = std::min(uniform(rng, 1, 2 * ell + 2), left());
      anchors.push_back(b.path(size).front());
    }
  }
  // Occasionally tie gadgets together.
  if (anchors.size() >= 2 && uniform(rng, 0, 2) == 0) {
    const int extra = uniform(rng, 1, 2);
    for (int i = 0; i < extra; ++i) {
      auto pick = [&] {
        return anchors[static_cast<std::size_t>(
            uniform(rng, 0, static_cast<int>(anchors.size()) - 1))];
      };
      b.link(pick(), pick());
    }
  }
  return b.build();
}

COCInstance random_instance(std::size_t max_n, int max_ell, int min_k,
                            int max_k, Rng& rng) {
  COCInstance inst;
  inst.ell = uniform(rng, 1, max_ell);
  inst.k = uniform(rng, min_k, max_k);
  const auto n = static_cast<std::size_t>(
      uniform(rng, 1, static_cast<int>(std::max<std::size_t>(max_n, 1))));
  if (uniform(rng, 0, 1) == 0) {
    // Sparse enough that small budgets are sometimes sufficient.
    const double avg_degree = std::uniform_real_distribution<double>(0.5, 3.0)(rng);
    const double p = n > 1 ? std::min(1.0, avg_degree / static_cast<double>(n - 1)) : 0.0;
    inst.graph = erdos_renyi(n, p, rng);
  } else {
    inst.graph = gadget_union(n, inst.ell, rng);
  }
  return inst;
}

}  // namespace coc
