#include "coc/lp.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace coc {

using boost::multiprecision::mpz_int;

void LPInstance::validate() const {
  if (normalized(variables) != variables) {
    throw InputError("LP variables must be sorted and distinct");
  }
  for (const auto& c : constraints) {
    if (c.empty()) throw InputError("empty LP constraint");
    if (normalized(c) != c) throw InputError("LP constraint must be sorted");
    if (!is_subset(c, variables)) {
      throw InputError("LP constraint " + to_string(c) +
                       " uses an unknown variable");
    }
  }
  for (auto [v, b] : fixed) {
    if (!contains(variables, v)) {
      throw InputError("fixed value for unknown variable " + std::to_string(v));
    }
    if (b != 0 && b != 1) throw InputError("fixed values must be 0 or 1");
  }
}

const Rational& LPSolution::value(Vertex v) const {
  auto it = std::lower_bound(variables.begin(), variables.end(), v);
  if (it == variables.end() || *it != v) {
    throw InputError("no LP variable for vertex " + std::to_string(v));
  }
  return values[static_cast<std::size_t>(it - variables.begin())];
}

LPInstance build_coc_lp(const Graph& g, int ell) {
  if (ell < 1) throw InputError("ell must be positive");
  LPInstance inst;
  inst.variables = g.vertices();
  inst.constraints =
      enumerate_connected_sets(g, static_cast<std::size_t>(ell) + 1);
  return inst;
}

// Revised simplex on the dual of the covering LP:
//
//   max  sum_C y_C - sum_v u_v
//   s.t. sum_{C ni v} y_C - u_v - z_v + s_v = 1   for every variable v
//        y, u, z, s >= 0
//
// y_C prices covering constraint C, u_v the bound x_v <= 1, z_v a fixing
// x_v <= 0, and s_v is the slack whose column prices x_v >= 0. The all-slack
// basis is feasible, and at optimality the simplex multipliers are an
// optimal basic solution of the primal.
struct LpSession::Engine {
  struct Column {
    std::vector<std::uint32_t> rows;
    int coef;  // +1 or -1 on every row
    int cost;  // objective coefficient (maximized)
  };

  std::size_t n = 0;
  std::vector<Column> columns;
  std::vector<std::size_t> basis;             // basic column per row
  std::vector<std::vector<Rational>> inverse;  // basis inverse, row-major
  std::vector<Rational> rhs;                  // basic variable values
  std::size_t pivots = 0;

  Engine(const LPInstance& inst) : n(inst.variables.size()) {
    auto row_of = [&](Vertex v) {
      return static_cast<std::uint32_t>(
          std::lower_bound(inst.variables.begin(), inst.variables.end(), v) -
          inst.variables.begin());
    };
    for (const auto& c : inst.constraints) {
      Column col{{}, 1, 1};
      for (Vertex v : c) col.rows.push_back(row_of(v));
      columns.push_back(std::move(col));
    }
    for (auto [v, b] : inst.fixed) {
      if (b == 1) columns.push_back({{row_of(v)}, 1, 1});
    }
    for (std::uint32_t i = 0; i < n; ++i) columns.push_back({{i}, -1, -1});
    for (auto [v, b] : inst.fixed) {
      if (b == 0) columns.push_back({{row_of(v)}, -1, 0});
    }
    const std::size_t first_slack = columns.size();
    for (std::uint32_t i = 0; i < n; ++i) columns.push_back({{i}, 1, 0});

    basis.resize(n);
    inverse.assign(n, std::vector<Rational>(n));
    rhs.assign(n, Rational(1));
    for (std::size_t i = 0; i < n; ++i) {
      basis[i] = first_slack + i;
      inverse[i][i] = 1;
    }
  }

  // Simplex multipliers pi = c_B^T B^{-1}; these are the primal values.
  std::vector<Rational> multipliers() const {
    std::vector<Rational> pi(n);
    for (std::size_t i = 0; i < n; ++i) {
      int c = columns[basis[i]].cost;
      if (c == 0) continue;
      for (std::size_t k = 0; k < n; ++k) {
        if (inverse[i][k] == 0) continue;
        if (c > 0) {
          pi[k] += inverse[i][k];
        } else {
          pi[k] -= inverse[i][k];
        }
      }
    }
    return pi;
  }

  // Bland's rule: lowest-numbered column with positive reduced cost.
  // Reduced costs are compared after scaling the multipliers to a common
  // integer denominator, in int64 when the numbers are small enough.
  std::optional<std::size_t> entering(const std::vector<Rational>& pi) const {
    mpz_int denom = 1;
    for (const auto& p : pi) {
      denom = boost::multiprecision::lcm(
          denom, boost::multiprecision::denominator(p));
    }
    std::vector<mpz_int> scaled(n);
    mpz_int largest = denom;
    for (std::size_t k = 0; k < n; ++k) {
      scaled[k] = boost::multiprecision::numerator(pi[k]) *
                  (denom / boost::multiprecision::denominator(pi[k]));
      mpz_int mag = abs(scaled[k]);
      if (mag > largest) largest = mag;
    }
    const mpz_int limit = mpz_int(1) << 52;
    if (largest < limit) {
      std::vector<std::int64_t> p(n);
      for (std::size_t k = 0; k < n; ++k) {
        p[k] = scaled[k].convert_to<std::int64_t>();
      }
      const auto d = denom.convert_to<std::int64_t>();
      for (std::size_t j = 0; j < columns.size(); ++j) {
        const Column& col = columns[j];
        std::int64_t dot = 0;
        for (std::uint32_t r : col.rows) dot += p[r];
        if (col.cost * d - col.coef * dot > 0) return j;
      }
      return std::nullopt;
    }
    for (std::size_t j = 0; j < columns.size(); ++j) {
      const Column& col = columns[j];
      mpz_int dot = 0;
      for (std::uint32_t r : col.rows) dot += scaled[r];
      if (col.cost * denom - col.coef * dot > 0) return j;
    }
    return std::nullopt;
  }

  void pivot(std::size_t r, std::size_t j, const std::vector<Rational>& alpha) {
    const Rational pivot_value = alpha[r];
    std::vector<std::size_t> nonzero;
    for (std::size_t k = 0; k < n; ++k) {
      if (inverse[r][k] != 0) {
        inverse[r][k] /= pivot_value;
        nonzero.push_back(k);
      }
    }
    rhs[r] /= pivot_value;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == r || alpha[i] == 0) continue;
      const Rational factor = alpha[i];
      for (std::size_t k : nonzero) inverse[i][k] -= factor * inverse[r][k];
      rhs[i] -= factor * rhs[r];
    }
    basis[r] = j;
    ++pivots;
  }

  void optimize() {
    for (;;) {
      std::vector<Rational> pi = multipliers();
      auto j = entering(pi);
      if (!j) return;
      const Column& col = columns[*j];
      std::vector<Rational> alpha(n);
      for (std::size_t i = 0; i < n; ++i) {
        Rational sum = 0;
        for (std::uint32_t r : col.rows) sum += inverse[i][r];
        alpha[i] = col.coef > 0 ? sum : Rational(-sum);
      }
      std::optional<std::size_t> leave;
      Rational best;
      for (std::size_t i = 0; i < n; ++i) {
        if (alpha[i] <= 0) continue;
        Rational ratio = rhs[i] / alpha[i];
        if (!leave || ratio < best ||
            (ratio == best && basis[i] < basis[*leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (!leave) {
        throw std::runtime_error("LP is infeasible (fixed zeros block a constraint)");
      }
      pivot(*leave, *j, alpha);
    }
  }

  LPSolution extract(const VertexSet& variables) const {
    LPSolution sol;
    sol.variables = variables;
    sol.values = multipliers();
    for (const auto& v : sol.values) sol.objective += v;
    Rational dual = 0;
    for (std::size_t i = 0; i < n; ++i) dual += columns[basis[i]].cost * rhs[i];
    if (dual != sol.objective) {
      throw std::logic_error("LP duality gap at reported optimum");
    }
    return sol;
  }
};

LpSession::LpSession(LPInstance inst) : inst_(std::move(inst)) {
  inst_.validate();
  engine_ = std::make_unique<Engine>(inst_);
  engine_->optimize();
  solution_ = engine_->extract(inst_.variables);
}

LpSession::~LpSession() = default;
LpSession::LpSession(LpSession&&) noexcept = default;
LpSession& LpSession::operator=(LpSession&&) noexcept = default;

std::size_t LpSession::pivots() const { return engine_->pivots; }

LPSolution LpSession::probe_fixed_one(Vertex v) const {
  if (!contains(inst_.variables, v)) {
    throw InputError("no LP variable for vertex " + std::to_string(v));
  }
  Engine probe = *engine_;
  auto row = static_cast<std::uint32_t>(
      std::lower_bound(inst_.variables.begin(), inst_.variables.end(), v) -
      inst_.variables.begin());
  probe.columns.push_back({{row}, 1, 1});
  probe.optimize();
  engine_->pivots = probe.pivots;
  return probe.extract(inst_.variables);
}

LPSolution solve_lp(const LPInstance& inst) {
  return LpSession(inst).solution();
}

LPInstance substitute_fixed_one(const LPInstance& inst, Vertex v) {
  inst.validate();
  if (!contains(inst.variables, v)) {
    throw InputError("no LP variable for vertex " + std::to_string(v));
  }
  LPInstance out;
  out.variables = set_difference(inst.variables, {v});
  for (const auto& c : inst.constraints) {
    if (!contains(c, v)) out.constraints.push_back(c);
  }
  out.fixed = inst.fixed;
  out.fixed.erase(v);
  return out;
}

LPSolution solve_with_fixed_one(const LPInstance& inst, Vertex v,
                                FixRoute route) {
  if (route == FixRoute::kDirect) {
    LPInstance fixed = inst;
    fixed.fixed[v] = 1;
    if (!contains(inst.variables, v)) {
      throw InputError("no LP variable for vertex " + std::to_string(v));
    }
    return solve_lp(fixed);
  }
  LPSolution rest = solve_lp(substitute_fixed_one(inst, v));
  LPSolution sol;
  sol.variables = inst.variables;
  for (Vertex u : inst.variables) {
    sol.values.push_back(u == v ? Rational(1) : rest.value(u));
  }
  sol.objective = rest.objective + 1;
  return sol;
}

std::pair<VertexSet, VertexSet> ones_and_zeros(const LPSolution& sol) {
  std::pair<VertexSet, VertexSet> out;
  for (std::size_t i = 0; i < sol.variables.size(); ++i) {
    if (sol.values[i] == 1) out.first.push_back(sol.variables[i]);
    if (sol.values[i] == 0) out.second.push_back(sol.variables[i]);
  }
  return out;
}

bool is_feasible(const LPInstance& inst, const LPSolution& sol) {
  if (sol.variables != inst.variables ||
      sol.values.size() != inst.variables.size()) {
    return false;
  }
  Rational total = 0;
  for (const auto& x : sol.values) {
    if (x < 0 || x > 1) return false;
    total += x;
  }
  if (total != sol.objective) return false;
  for (const auto& c : inst.constraints) {
    Rational sum = 0;
    for (Vertex v : c) sum += sol.value(v);
    if (sum < 1) return false;
  }
  for (auto [v, b] : inst.fixed) {
    if (sol.value(v) != b) return false;
  }
  return true;
}

std::string format_lp(const LPInstance& inst, int id_offset) {
  std::ostringstream os;
  for (const auto& c : inst.constraints) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      os << (i ? " " : "") << c[i] + id_offset;
    }
    os << '\n';
  }
  return os.str();
}

std::string to_string(const Rational& r) { return r.str(); }

}  // namespace coc
