#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>

#include "coc/graph.hpp"

namespace coc {

/// An l-COC instance: can at most k deletions leave every component of
/// the graph with at most ell vertices?
struct COCInstance {
  Graph graph;
  int ell = 1;
  int k = 0;
};

/// Thrown when an exhaustive solver is asked to handle an instance above
/// its size cap. This is a refusal, not a verdict.
class SolverCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SolveOutcome {
  bool yes = false;
  /// A solution of size at most k when yes.
  std::optional<VertexSet> witness;
  /// Leaves of the search tree (branching) or subsets tested (brute force).
  std::size_t nodes = 0;
};

inline constexpr std::size_t kDefaultBruteForceCap = 16;

/// Tries every vertex subset of size at most k, smallest first and
/// lexicographically within a size.
SolveOutcome brute_force_solve(const COCInstance& inst,
                               std::size_t cap = kDefaultBruteForceCap);

/// Branches over the ell + 1 vertices of a connected set inside an
/// oversized component. The search tree has at most (ell + 1)^k leaves.
SolveOutcome branching_solve(const COCInstance& inst);

}  // namespace coc
