#include "doctest.h"

#include "coc/bipartite.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace coc;
using coc::testing::random_bipartite;

namespace {

BipartiteGraph complete(int na, int nb) {
  Rng rng(0);
  return random_bipartite(na, nb, 1.0, rng);
}

}  // namespace

TEST_CASE("sides must be disjoint") {
  CHECK_THROWS_AS(BipartiteGraph({1, 2}, {2, 3}), InputError);
  BipartiteGraph g({1}, {2});
  CHECK(g.add_edge(1, 2));
  CHECK_FALSE(g.add_edge(1, 2));
  CHECK_THROWS_AS(g.add_edge(2, 1), InputError);
}

TEST_CASE("max_matching examples") {
  BipartiteGraph c4({0, 1}, {10, 11});
  c4.add_edge(0, 10);
  c4.add_edge(1, 10);
  c4.add_edge(1, 11);
  c4.add_edge(0, 11);
  CHECK(max_matching(c4).size() == 2);
  CHECK(max_matching(complete(2, 3)).size() == 2);
  CHECK(max_matching(BipartiteGraph({0, 1}, {5})).size() == 0);
}

TEST_CASE("max_matching equals the exhaustive maximum") {
  Rng rng(21);
  for (int trial = 0; trial < 400; ++trial) {
    const int na = testing::pick(rng, 0, 6);
    const int nb = testing::pick(rng, 0, 6);
    BipartiteGraph g = random_bipartite(na, nb, 0.35, rng);
    Matching m = max_matching(g);
    CHECK(is_matching(g, m));
    CHECK(m.size() == oracle::max_matching_size(g));
  }
}

TEST_CASE("is_matching rejects shared endpoints") {
  BipartiteGraph g({0, 1}, {10});
  g.add_edge(0, 10);
  g.add_edge(1, 10);
  CHECK_FALSE(is_matching(g, Matching{{0, 1}}));
  CHECK(is_matching(g, Matching{{1}}));
}

TEST_CASE("hall_violator examples") {
  BipartiteGraph shared({1, 2}, {10});
  shared.add_edge(1, 10);
  shared.add_edge(2, 10);
  CHECK(hall_violator(shared, 1) == VertexSet{1, 2});

  BipartiteGraph two({1}, {10, 11});
  two.add_edge(1, 10);
  two.add_edge(1, 11);
  CHECK_FALSE(hall_violator(two, 2).has_value());

  BipartiteGraph one({1}, {10});
  one.add_edge(1, 10);
  CHECK(hall_violator(one, 2) == VertexSet{1});
}

TEST_CASE("hall_violator is sound and complete") {
  Rng rng(22);
  for (int trial = 0; trial < 400; ++trial) {
    const int q = testing::pick(rng, 1, 3);
    BipartiteGraph g = random_bipartite(testing::pick(rng, 1, 5), testing::pick(rng, 0, 9), 0.4, rng);
    const auto x = hall_violator(g, q);
    const bool expands = oracle::has_q_expansion(g, g.side_a(), g.side_b(), q);
    CHECK(x.has_value() == !expands);
    if (x) {
      CHECK_FALSE(x->empty());
      CHECK(g.neighbors_of_a(*x).size() < static_cast<std::size_t>(q) * x->size());
    }
  }
}

TEST_CASE("build_twin_graph") {
  BipartiteGraph g({1}, {2});
  g.add_edge(1, 2);
  const std::vector<Weight> three{3};
  TwinGraph t = build_twin_graph(g, Side::B, three);
  CHECK(t.graph.size_b() == 3);
  CHECK(t.graph.num_edges() == 3);
  CHECK(t.origin == std::vector<std::size_t>{0, 0, 0});
  CHECK(t.graph.side_a() == VertexSet{1});

  const std::vector<Weight> two{2};
  TwinGraph ta = build_twin_graph(g, Side::A, two);
  CHECK(ta.graph.size_a() == 2);
  CHECK(ta.graph.side_b() == VertexSet{2});
  CHECK(ta.graph.num_edges() == 2);

  const std::vector<Weight> zero{0};
  CHECK_THROWS_AS(build_twin_graph(g, Side::B, zero), InputError);
}

TEST_CASE("twin degrees and counts") {
  Rng rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    BipartiteGraph g = random_bipartite(testing::pick(rng, 1, 6), testing::pick(rng, 1, 6), 0.5, rng);
    std::vector<Weight> w(g.size_b());
    Weight total = 0;
    for (auto& x : w) total += x = testing::pick(rng, 1, 4);
    TwinGraph t = build_twin_graph(g, Side::B, w);
    CHECK(static_cast<Weight>(t.graph.size_b()) == total);
    CHECK(t.graph.side_a() == g.side_a());
    for (std::size_t i = 0; i < t.graph.size_b(); ++i) {
      CHECK(t.graph.edges_at_b(i).size() == g.edges_at_b(t.origin[i]).size());
      CHECK(i >= t.first_twin[t.origin[i]]);
      CHECK(i < t.first_twin[t.origin[i] + 1]);
    }
    // Weight 1 everywhere is the identity up to renaming.
    std::vector<Weight> ones(g.size_b(), 1);
    CHECK(build_twin_graph(g, Side::B, ones).graph.num_edges() == g.num_edges());
  }
}
