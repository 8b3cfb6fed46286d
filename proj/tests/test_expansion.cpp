#include "doctest.h"

#include "coc/expansion.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace coc;
using coc::testing::pick;
using coc::testing::random_bipartite;

namespace {

BipartiteGraph complete(int na, int nb) {
  Rng rng(0);
  return random_bipartite(na, nb, 1.0, rng);
}

// Every member of pair.x holds at least q distinct items, each item used
// by one member only.
bool is_plain_expansion(const BipartiteGraph& g, const ExpansionPair& pair, int q) {
  if (!is_unsplitting(g, pair.assignment)) return false;
  for (Vertex x : pair.x) {
    if (allocated_to(g, pair.assignment, g.a_index(x)) < q) return false;
  }
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    if (pair.assignment[e] == 0) continue;
    if (pair.assignment[e] != 1) return false;
    if (!contains(pair.x, g.side_a()[g.edges()[e].a])) return false;
    if (!contains(pair.y, g.side_b()[g.edges()[e].b])) return false;
  }
  return true;
}

bool weighted_ok(const BipartiteGraph& g, const ExpansionPair& pair,
                 const CapacityFn& cap, Weight q) {
  if (!is_closed_pair(g, pair) || !satisfies_capacities(g, pair.assignment, cap)) return false;
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    if (pair.assignment[e] > 0 &&
        (!contains(pair.x, g.side_a()[g.edges()[e].a]) ||
         !contains(pair.y, g.side_b()[g.edges()[e].b]))) {
      return false;
    }
  }
  return pair.x.empty() || min_allocation(g, pair) >= q;
}

}  // namespace

TEST_CASE("expansion_lemma examples") {
  ExpansionPair one = expansion_lemma(complete(1, 2), 1);
  CHECK(one.x == VertexSet{0});
  CHECK(one.y == VertexSet{100, 101});

  BipartiteGraph g({1, 2}, {11, 12, 13, 14});
  g.add_edge(1, 11);
  for (Vertex b : {11, 12, 13, 14}) g.add_edge(2, b);
  ExpansionPair peeled = expansion_lemma(g, 2);
  CHECK(peeled.x == VertexSet{2});
  CHECK(peeled.y == VertexSet{12, 13, 14});
  CHECK(is_closed_pair(g, peeled));
  CHECK(is_plain_expansion(g, peeled, 2));
  CHECK(oracle::has_q_expansion(g, {2}, {12, 13, 14}, 2));
  CHECK_FALSE(oracle::has_q_expansion(g, {1, 2}, g.side_b(), 2));

  BipartiteGraph k24 = complete(2, 4);
  ExpansionPair full = expansion_lemma(k24, 2);
  CHECK(full.x == k24.side_a());
  CHECK(full.y == k24.side_b());
  CHECK(is_plain_expansion(k24, full, 2));
}

TEST_CASE("expansion_lemma preconditions") {
  CHECK_THROWS_AS(expansion_lemma(complete(2, 3), 2), InputError);
  CHECK_THROWS_AS(expansion_lemma(BipartiteGraph({}, {1}), 1), InputError);
  BipartiteGraph isolated({1}, {10, 11});
  isolated.add_edge(1, 10);
  CHECK_THROWS_AS(expansion_lemma(isolated, 1), InputError);
}

TEST_CASE("expansion_lemma on random inputs") {
  Rng rng(41);
  for (int trial = 0; trial < 300; ++trial) {
    const int q = pick(rng, 1, 3);
    const int na = pick(rng, 1, 5);
    BipartiteGraph g = random_bipartite(na, q * na + pick(rng, 0, 3), 0.3, rng);
    testing::attach_isolated_items(g, rng);
    ExpansionPair pair = expansion_lemma(g, q);
    CHECK_FALSE(pair.x.empty());
    CHECK_FALSE(pair.y.empty());
    CHECK(is_closed_pair(g, pair));
    CHECK(is_plain_expansion(g, pair, q));
  }
}

TEST_CASE("find_q_expansion_pair examples") {
  auto star = find_q_expansion_pair(complete(1, 3), 2);
  REQUIRE(star);
  CHECK(star->x == VertexSet{0});

  BipartiteGraph shared({1, 2}, {10});
  shared.add_edge(1, 10);
  shared.add_edge(2, 10);
  CHECK_FALSE(oracle::exists_expansion_pair(shared, 1));
  CHECK_FALSE(find_q_expansion_pair(shared, 1));

  CHECK_FALSE(find_q_expansion_pair(BipartiteGraph({}, {1, 2}), 1));
}

TEST_CASE("find_q_expansion_pair agrees with exhaustive search") {
  Rng rng(42);
  int found = 0;
  for (int trial = 0; trial < 600; ++trial) {
    const int q = pick(rng, 1, 3);
    const int na = pick(rng, 1, 4);
    const int nb = pick(rng, 0, 10 - na);
    BipartiteGraph g = random_bipartite(na, nb, std::uniform_real_distribution<double>(0.15, 0.6)(rng), rng);
    const auto pair = find_q_expansion_pair(g, q);
    REQUIRE(pair.has_value() == oracle::exists_expansion_pair(g, q));
    if (pair) {
      ++found;
      CHECK_FALSE(pair->x.empty());
      CHECK(is_closed_pair(g, *pair));
      CHECK(is_plain_expansion(g, *pair, q));
    }
  }
  CHECK(found > 50);
}

TEST_CASE("weighted_q_expansion_pair examples") {
  BipartiteGraph one({1}, {10});
  one.add_edge(1, 10);
  auto big = weighted_q_expansion_pair(one, 3, {3});
  REQUIRE(big);
  CHECK(big->assignment == EdgeWeightFn{3});
  CHECK_FALSE(weighted_q_expansion_pair(one, 3, {2}));

  BipartiteGraph g = complete(2, 2);
  const CapacityFn cap{2, 2};
  auto pair = weighted_q_expansion_pair(g, 2, cap);
  REQUIRE(pair);
  CHECK(pair->x == g.side_a());
  CHECK(is_unsplitting(g, pair->assignment));
  CHECK(min_allocation(g, *pair) == 2);
  // Oracle over the twin graph: a 2-expansion of both customers exists.
  TwinGraph t = build_twin_graph(g, Side::B, cap);
  CHECK(oracle::has_q_expansion(t.graph, t.graph.side_a(), t.graph.side_b(), 2));
}

TEST_CASE("weighted_q_expansion_pair agrees with the twin-graph oracle") {
  Rng rng(43);
  for (int trial = 0; trial < 300; ++trial) {
    const int q = pick(rng, 1, 4);
    BipartiteGraph g = random_bipartite(pick(rng, 1, 3), pick(rng, 1, 4), 0.5, rng);
    CapacityFn cap(g.size_b());
    for (auto& c : cap) c = pick(rng, 1, 3);
    const auto pair = weighted_q_expansion_pair(g, q, cap);
    TwinGraph t = build_twin_graph(g, Side::B, cap);
    REQUIRE(pair.has_value() == oracle::exists_expansion_pair(t.graph, q));
    if (pair) {
      CHECK_FALSE(pair->x.empty());
      CHECK(weighted_ok(g, *pair, cap, q));
    }
  }
}

TEST_CASE("strictify") {
  // The rounding example at q = 1, W = 2.
  BipartiteGraph g({1, 2}, {10});
  g.add_edge(1, 10);
  g.add_edge(2, 10);
  const EdgeWeightFn h = strictify(g, EdgeWeightFn{1, 1}, {2}, 1);
  CHECK(is_unsplitting(g, h));
  CHECK(allocated_to(g, h, 0) >= 1);

  // Already unsplitting input keeps the root's total.
  BipartiteGraph s = complete(1, 2);
  const EdgeWeightFn f{2, 3};
  const EdgeWeightFn same = strictify(s, f, {2, 3}, 5);
  CHECK(allocated_to(s, same, 0) == 5);

  Rng rng(44);
  for (int trial = 0; trial < 300; ++trial) {
    const int q = pick(rng, 1, 5);
    BipartiteGraph r = random_bipartite(pick(rng, 1, 4), pick(rng, 1, 7), 0.5, rng);
    CapacityFn cap(r.size_b());
    for (auto& c : cap) c = pick(rng, 1, 3);
    auto pair = weighted_q_expansion_pair(r, q, cap);
    if (!pair) continue;
    BipartiteGraph sub = r.induced(pair->x, pair->y);
    CapacityFn sub_cap;
    for (Vertex b : sub.side_b()) sub_cap.push_back(cap[r.b_index(b)]);
    const EdgeWeightFn fx = transfer_weights(r, pair->assignment, sub);
    const Vertex root = sub.side_a()[static_cast<std::size_t>(pick(rng, 0, static_cast<int>(sub.size_a()) - 1))];
    const EdgeWeightFn out = strictify(sub, fx, sub_cap, q, root);
    const Weight w = max_capacity(sub_cap);
    CHECK(is_unsplitting(sub, out));
    CHECK(satisfies_capacities(sub, out, sub_cap));
    for (std::size_t a = 0; a < sub.size_a(); ++a) {
      CHECK(allocated_to(sub, out, a) >= q - w + 1);
    }
    CHECK(allocated_to(sub, out, sub.a_index(root)) >= q);
    DemandFn shifted(sub.size_a(), std::max<Weight>(0, q - w + 1));
    CHECK(oracle::exists_unsplitting(sub, sub_cap, shifted, sub.a_index(root), q));
  }
}

TEST_CASE("weighted_expansion_lemma examples") {
  BipartiteGraph one = complete(1, 2);
  ExpansionPair p = weighted_expansion_lemma(one, 3, 3, {3, 2});
  CHECK(p.x == VertexSet{0});
  CHECK(p.y == VertexSet{100, 101});
  CHECK(max_allocation(one, p) == 5);

  Rng rng(45);
  BipartiteGraph unit = random_bipartite(3, 7, 0.5, rng);
  testing::attach_isolated_items(unit, rng);
  ExpansionPair u = weighted_expansion_lemma(unit, 2, 1, CapacityFn(unit.size_b(), 1));
  CHECK(is_closed_pair(unit, u));
  CHECK(is_plain_expansion(unit, u, 2));

  BipartiteGraph six = complete(2, 6);
  ExpansionPair both = weighted_expansion_lemma(six, 3, 2, CapacityFn(6, 2));
  CHECK(both.x.size() == 2);
  CHECK(min_allocation(six, both) >= 3);
  CHECK(max_allocation(six, both) >= 4);
  CHECK(is_unsplitting(six, both.assignment));
}

TEST_CASE("weighted_expansion_lemma preconditions") {
  BipartiteGraph g = complete(1, 2);
  CHECK_THROWS_AS(weighted_expansion_lemma(g, 3, 3, {2, 2}), InputError);   // 4 < 5
  CHECK_THROWS_AS(weighted_expansion_lemma(g, 1, 2, {3, 1}), InputError);   // cap > W
  CHECK_THROWS_AS(weighted_expansion_lemma(g, 1, 2, {0, 2}), InputError);
}

TEST_CASE("duplicating items keeps the lemma applicable") {
  Rng rng(46);
  for (int trial = 0; trial < 100; ++trial) {
    const int q = pick(rng, 1, 3);
    const int w = pick(rng, 1, 3);
    const int na = pick(rng, 1, 4);
    const int nb = (q + w - 1) * na;
    BipartiteGraph g = random_bipartite(na, nb, 0.4, rng);
    testing::attach_isolated_items(g, rng);
    CapacityFn cap(g.size_b());
    for (auto& c : cap) c = pick(rng, 1, w);
    cap[0] = w;
    Weight total = 0;
    for (Weight c : cap) total += c;
    if (total < static_cast<Weight>(q + w - 1) * na) continue;
    ExpansionPair p = weighted_expansion_lemma(g, q, w, cap);
    CHECK_FALSE(p.x.empty());

    VertexSet b2 = g.side_b();
    for (Vertex b : g.side_b()) b2.push_back(b + 1000);
    BipartiteGraph dup(g.side_a(), normalized(b2));
    CapacityFn cap2(dup.size_b());
    for (const auto& e : g.edges()) {
      dup.add_edge(g.side_a()[e.a], g.side_b()[e.b]);
      dup.add_edge(g.side_a()[e.a], g.side_b()[e.b] + 1000);
    }
    for (std::size_t b = 0; b < g.size_b(); ++b) {
      cap2[dup.b_index(g.side_b()[b])] = cap[b];
      cap2[dup.b_index(g.side_b()[b] + 1000)] = cap[b];
    }
    ExpansionPair d = weighted_expansion_lemma(dup, q, w, cap2);
    CHECK_FALSE(d.x.empty());
    CHECK(weighted_ok(dup, d, cap2, q));
  }
}
