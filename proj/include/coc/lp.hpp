#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "coc/graph.hpp"

namespace coc {

using Rational = boost::multiprecision::mpq_rational;

/// minimize sum x_v  s.t.  sum_{v in C} x_v >= 1 for every covering set C,
/// 0 <= x_v <= 1, and x_v = b for every fixed entry (v, b).
struct LPInstance {
  VertexSet variables;
  std::vector<VertexSet> constraints;
  std::map<Vertex, int> fixed;

  /// Throws InputError on constraints over unknown or repeated variables,
  /// empty constraints, or fixed values other than 0 and 1.
  void validate() const;
};

struct LPSolution {
  VertexSet variables;
  std::vector<Rational> values;  // aligned with variables
  Rational objective;

  const Rational& value(Vertex v) const;
};

/// One covering constraint per connected set of ell + 1 vertices.
LPInstance build_coc_lp(const Graph& g, int ell);

/// Optimal basic solution, computed exactly. Throws std::runtime_error if
/// fixed zeros make the instance infeasible.
LPSolution solve_lp(const LPInstance& inst);

enum class FixRoute {
  /// Add x_v >= 1 to the instance and re-optimize.
  kDirect,
  /// Solve the instance with v and every constraint through v removed,
  /// then put x_v = 1 back.
  kSubstitute,
};

LPSolution solve_with_fixed_one(const LPInstance& inst, Vertex v,
                                FixRoute route = FixRoute::kDirect);

/// The instance left after committing x_v = 1: v and all constraints
/// containing v are dropped.
LPInstance substitute_fixed_one(const LPInstance& inst, Vertex v);

/// Variables equal to exactly 1 and exactly 0.
std::pair<VertexSet, VertexSet> ones_and_zeros(const LPSolution& sol);

/// Exact check of bounds, covering constraints, fixings and the objective.
bool is_feasible(const LPInstance& inst, const LPSolution& sol);

/// One constraint per line, members in ascending order, ids shifted by
/// `id_offset`.
std::string format_lp(const LPInstance& inst, int id_offset = 0);

std::string to_string(const Rational& r);

/// Keeps the optimal basis of an instance so that fixed-variable probes
/// restart from it instead of from scratch.
class LpSession {
 public:
  explicit LpSession(LPInstance inst);
  ~LpSession();
  LpSession(LpSession&&) noexcept;
  LpSession& operator=(LpSession&&) noexcept;

  const LPInstance& instance() const { return inst_; }
  const LPSolution& solution() const { return solution_; }

  /// Optimum with x_v = 1 added (the kDirect route, warm-started).
  LPSolution probe_fixed_one(Vertex v) const;

  /// Simplex pivots spent so far, including probes.
  std::size_t pivots() const;

 private:
  struct Engine;
  LPInstance inst_;
  std::unique_ptr<Engine> engine_;
  LPSolution solution_;
};

}  // namespace coc
