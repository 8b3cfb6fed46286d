#pragma once

#include <cstddef>
#include <random>

#include "coc/solvers.hpp"

namespace coc {

using Rng = std::mt19937_64;

/// G(n, p).
Graph erdos_renyi(std::size_t n, double p, Rng& rng);

/// Disjoint union of random gadgets on at most max_n vertices: hubs with
/// pendant components of size at most ell (sometimes shared between two
/// hubs), small cliques, and short paths. These are the shapes in which
/// reducible pairs appear.
Graph gadget_union(std::size_t max_n, int ell, Rng& rng);

/// Mixes the two families above with 1 <= ell <= max_ell and
/// min_k <= k <= max_k.
COCInstance random_instance(std::size_t max_n, int max_ell, int min_k,
                            int max_k, Rng& rng);

}  // namespace coc
