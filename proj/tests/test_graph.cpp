#include "doctest.h"

#include "coc/generators.hpp"
#include "coc/graph.hpp"
#include "oracles.hpp"

using namespace coc;

namespace {

Graph path(int n) {
  Graph g = Graph::with_vertices(static_cast<std::size_t>(n));
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph clique(int n) {
  Graph g = Graph::with_vertices(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  }
  return g;
}

Graph star(int leaves) {
  Graph g = Graph::with_vertices(static_cast<std::size_t>(leaves + 1));
  for (int i = 1; i <= leaves; ++i) g.add_edge(0, i);
  return g;
}

}  // namespace

TEST_CASE("graph rejects malformed edges") {
  Graph g = Graph::with_vertices(3);
  CHECK(g.add_edge(0, 1));
  CHECK_FALSE(g.add_edge(1, 0));
  CHECK_THROWS_AS(g.add_edge(2, 2), InputError);
  CHECK_THROWS_AS(g.add_edge(0, 7), InputError);
  CHECK(g.num_edges() == 1);
}

TEST_CASE("deleting vertices keeps ids") {
  Graph g = path(5).without({1, 3});
  CHECK(g.vertices() == VertexSet{0, 2, 4});
  CHECK(g.num_edges() == 0);
  Graph h = path(5).induced({2, 3, 4});
  CHECK(h.has_edge(3, 4));
  CHECK_FALSE(h.has_vertex(0));
}

TEST_CASE("connected_components") {
  Graph g = Graph::with_vertices(4);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  CHECK(connected_components(g) == std::vector<VertexSet>{{0, 1, 2}, {3}});
  CHECK(connected_components(Graph{}).empty());

  Graph two = Graph::with_vertices(6);
  for (auto [u, v] : std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}}) {
    two.add_edge(u, v);
  }
  auto comps = connected_components(two);
  REQUIRE(comps.size() == 2);
  CHECK(comps[0].size() == 3);
  CHECK(comps[1].size() == 3);
}

TEST_CASE("neighborhood") {
  Graph g = star(3);
  CHECK(neighborhood(g, {0}) == VertexSet{1, 2, 3});
  CHECK(neighborhood(g, {1}) == VertexSet{0});
  CHECK(neighborhood(g, g.vertices()).empty());
  CHECK_THROWS_AS(neighborhood(g, {9}), InputError);
}

TEST_CASE("enumerate_connected_sets examples") {
  CHECK(enumerate_connected_sets(path(4), 3) == std::vector<VertexSet>{{0, 1, 2}, {1, 2, 3}});
  CHECK(enumerate_connected_sets(clique(3), 2).size() == 3);
  // K_{1,3}: the oracle count is frozen at 3.
  const auto sets = enumerate_connected_sets(star(3), 3);
  CHECK(sets == oracle::connected_sets(star(3), 3));
  CHECK(sets.size() == 3);
  for (const auto& s : sets) CHECK(contains(s, 0));
}

TEST_CASE("enumerate_connected_sets matches the subset filter") {
  Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const auto n = std::uniform_int_distribution<std::size_t>(1, 10)(rng);
    const double p = std::uniform_real_distribution<double>(0.1, 0.7)(rng);
    Graph g = erdos_renyi(n, p, rng);
    if (trial % 3 == 0 && n > 2) g = g.without({static_cast<Vertex>(n / 2)});
    for (std::size_t z = 1; z <= 5; ++z) {
      const auto got = enumerate_connected_sets(g, z);
      REQUIRE(got == oracle::connected_sets(g, z));
      for (const auto& s : got) {
        CHECK(s.size() == z);
        CHECK(is_connected_set(g, s));
      }
    }
  }
}

TEST_CASE("components partition the vertex set") {
  Rng rng(12);
  for (int trial = 0; trial < 100; ++trial) {
    Graph g = erdos_renyi(15, 0.12, rng);
    VertexSet all;
    for (const auto& c : connected_components(g)) {
      CHECK(is_connected_set(g, c));
      CHECK(neighborhood(g, c).empty());
      CHECK(set_intersection(all, c).empty());
      all = set_union(all, c);
    }
    CHECK(all == g.vertices());
  }
}

TEST_CASE("is_coc_solution") {
  CHECK(is_coc_solution(path(5), {2}, 2));
  CHECK_FALSE(is_coc_solution(clique(3), {}, 1));
  CHECK(is_coc_solution(clique(3), {0, 2}, 1));
  Rng rng(13);
  for (int trial = 0; trial < 50; ++trial) {
    Graph g = erdos_renyi(8, 0.4, rng);
    for (int ell = 1; ell <= 3; ++ell) {
      CHECK(is_coc_solution(g, g.vertices(), ell));
      CHECK(is_coc_solution(g, {0, 3}, ell) ==
            (oracle::largest_component(g, {0, 3}) <= static_cast<std::size_t>(ell)));
    }
  }
}
