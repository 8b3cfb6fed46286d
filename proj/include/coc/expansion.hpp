#pragma once

#include <optional>

#include "coc/allocation.hpp"
#include "coc/bipartite.hpp"

namespace coc {

/// Sets X (A-ids) and Y (B-ids) with N(Y) within X, plus an edge weight
/// function on the host graph witnessing the expansion. The assignment is
/// zero on every edge leaving X x Y.
struct ExpansionPair {
  VertexSet x;
  VertexSet y;
  EdgeWeightFn assignment;
};

/// Moves positive weights from one graph's edge numbering to another's,
/// matching edges by endpoint ids. Throws InputError if a positive edge
/// has no counterpart.
EdgeWeightFn transfer_weights(const BipartiteGraph& from,
                              const EdgeWeightFn& f,
                              const BipartiteGraph& to);

/// N(pair.y) lies within pair.x in g.
bool is_closed_pair(const BipartiteGraph& g, const ExpansionPair& pair);

/// Smallest value the assignment gives to a member of pair.x (by id).
Weight min_allocation(const BipartiteGraph& g, const ExpansionPair& pair);
Weight max_allocation(const BipartiteGraph& g, const ExpansionPair& pair);

/// Classic q-Expansion Lemma: requires |B| >= q|A|, A nonempty and no
/// isolated vertex in B. Hall violators are peeled off together with their
/// neighborhoods until A has a q-expansion into what is left; the
/// assignment gives weight 1 to each of the q private items of every
/// member of x.
ExpansionPair expansion_lemma(const BipartiteGraph& g, int q);

/// Finds some X, Y with a q-expansion of X into Y and N(Y) within X,
/// without any size precondition.
///
/// Each round matches q copies of every remaining customer. Customers with
/// all copies matched survive; the others are dropped along with every
/// item they touch. The round's answer is accepted once the matched items
/// see only surviving customers.
std::optional<ExpansionPair> find_q_expansion_pair(const BipartiteGraph& g,
                                                   int q);

/// Weighted counterpart of find_q_expansion_pair: item b stands for cap[b]
/// units of value. The assignment satisfies cap and gives at least q to
/// every member of x. Capacities must be positive.
std::optional<ExpansionPair> weighted_q_expansion_pair(const BipartiteGraph& g,
                                                       int q,
                                                       const CapacityFn& cap);

/// Turns a weighted q-expansion f of all of A into an unsplitting one.
/// With W the largest capacity, every customer keeps at least q - W + 1
/// and `root` (an A-id; default the smallest) keeps at least q.
EdgeWeightFn strictify(const BipartiteGraph& g, const EdgeWeightFn& f,
                       const CapacityFn& cap, int q,
                       std::optional<Vertex> root = std::nullopt);

/// Weighted Expansion Lemma. Requires cap in [1, W], total capacity at
/// least (q + W - 1)|A|, A nonempty and no isolated item. Returns nonempty
/// x, y with N(y) within x and an unsplitting assignment that respects
/// cap, gives every member of x at least q and some member at least
/// q + W - 1.
ExpansionPair weighted_expansion_lemma(const BipartiteGraph& g, int q, int W,
                                       const CapacityFn& cap);

}  // namespace coc
