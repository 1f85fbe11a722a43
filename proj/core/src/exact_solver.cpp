#include "edgeslicer/exact_solver.hpp"

#include <algorithm>
#include <cstddef>
#include <functional>
#include <string>

namespace edgeslicer {

namespace {

// Margin below the incumbent before a subtree is pruned. The upper bound is
// mathematically admissible; the margin keeps float noise from cutting a
// branch that ties the optimum, which must be resolved lexicographically.
constexpr double kPruneMargin = 1e-12;

struct ErlangSearch {
  const Instance& inst;
  const ExactOptions& opts;
  std::vector<double> w;
  std::vector<std::int64_t> full_cap;           // N_p
  std::vector<std::vector<double>> served;      // served[p][k] = Bbar(A_p, k)
  SessionVector current;
  SessionVector best;
  double best_f = -1.0;
  std::int64_t nodes = 0;
  bool truncated = false;

  explicit ErlangSearch(const Instance& instance, const ExactOptions& options)
      : inst(instance), opts(options), w(weights(instance)) {
    const std::size_t pcount = inst.sps.size();
    full_cap.resize(pcount);
    served.resize(pcount);
    for (std::size_t p = 0; p < pcount; ++p) {
      full_cap[p] = full_pool_sessions(inst, p);
      served[p].resize(static_cast<std::size_t>(full_cap[p]) + 1);
      ErlangRecurrence rec(inst.sps[p].offered_load());
      for (std::int64_t k = 0; k <= full_cap[p]; ++k) {
        served[p][static_cast<std::size_t>(k)] = 1.0 - rec.blocking();
        if (k < full_cap[p]) rec.add_server();
      }
    }
    current.assign(pcount, 0);
    best.assign(pcount, 0);
  }

  std::int64_t fit(std::size_t p, const std::vector<std::int64_t>& remaining) const {
    std::int64_t best_fit = full_cap[p];
    for (int r = 0; r < inst.dims(); ++r) {
      best_fit = std::min(best_fit, remaining[r] / inst.sps[p].demand[r]);
    }
    return best_fit;
  }

  // Admissible bound on any completion: every later SP at its best
  // attainable count in the residual pool, ignoring contention between them.
  double tail_bound(std::size_t next, const std::vector<std::int64_t>& remaining) const {
    double bound = 0.0;
    for (std::size_t q = next; q < inst.sps.size(); ++q) {
      bound += w[q] * served[q][static_cast<std::size_t>(fit(q, remaining))];
    }
    return bound;
  }

  void dfs(std::size_t p, double partial, std::vector<std::int64_t>& remaining) {
    if (truncated) return;
    if (p == inst.sps.size()) {
      if (partial > best_f) {
        best_f = partial;
        best = current;
      }
      return;
    }
    const std::int64_t max_here = fit(p, remaining);
    for (std::int64_t k = 0; k <= max_here; ++k) {
      if (++nodes > opts.node_budget) {
        truncated = true;
        return;
      }
      current[p] = k;
      for (int r = 0; r < inst.dims(); ++r) remaining[r] -= k * inst.sps[p].demand[r];
      const double value = partial + w[p] * served[p][static_cast<std::size_t>(k)];
      if (!opts.prune || value + tail_bound(p + 1, remaining) >= best_f - kPruneMargin) {
        dfs(p + 1, value, remaining);
      }
      for (int r = 0; r < inst.dims(); ++r) remaining[r] += k * inst.sps[p].demand[r];
      if (truncated) break;
    }
    current[p] = 0;
  }
};

}  // namespace

ExactSolution solve_exact_erlang(const Instance& inst, const ExactOptions& opts) {
  inst.validate();
  ErlangSearch search(inst, opts);
  std::vector<std::int64_t> remaining = inst.pool.capacities;
  search.dfs(0, 0.0, remaining);
  ExactSolution out;
  out.n = search.best;
  out.objective = std::max(search.best_f, 0.0);
  out.nodes_explored = search.nodes;
  out.proven_optimal = !search.truncated;
  return out;
}

namespace {

// Lexicographic enumeration of session vectors maximizing the linear reward.
ExactSolution enumerate_linear(const Instance& inst, const std::vector<double>& w) {
  const std::size_t pcount = inst.sps.size();
  const int d = inst.dims();
  ExactSolution out;
  out.n.assign(pcount, 0);
  SessionVector current(pcount, 0);
  SessionVector best(pcount, 0);
  double best_value = -1.0;
  std::int64_t nodes = 0;
  std::vector<std::int64_t> remaining = inst.pool.capacities;

  const auto fit = [&](std::size_t p) {
    std::int64_t best_fit = remaining[0] / inst.sps[p].demand[0];
    for (int r = 1; r < d; ++r) {
      best_fit = std::min(best_fit, remaining[r] / inst.sps[p].demand[r]);
    }
    return best_fit;
  };

  const std::function<void(std::size_t, double)> dfs = [&](std::size_t p, double value) {
    if (p == pcount) {
      ++nodes;
      if (value > best_value) {
        best_value = value;
        best = current;
      }
      return;
    }
    const std::int64_t max_here = fit(p);
    for (std::int64_t k = 0; k <= max_here; ++k) {
      current[p] = k;
      for (int r = 0; r < d; ++r) remaining[r] -= k * inst.sps[p].demand[r];
      dfs(p + 1, value + w[p] * static_cast<double>(k));
      for (int r = 0; r < d; ++r) remaining[r] += k * inst.sps[p].demand[r];
    }
    current[p] = 0;
  };
  dfs(0, 0.0);

  out.n = best;
  out.objective = std::max(best_value, 0.0);
  out.nodes_explored = nodes;
  out.proven_optimal = true;
  return out;
}

}  // namespace

ExactSolution solve_mdkp_linear(const Instance& inst, const MdkpOptions& opts) {
  inst.validate();
  const std::size_t pcount = inst.sps.size();
  const int d = inst.dims();
  const std::vector<double> w = weights(inst);

  // Cell count of the capacity lattice, saturating on overflow.
  double cells_estimate = 1.0;
  for (int r = 0; r < d; ++r) {
    cells_estimate *= static_cast<double>(inst.pool.capacities[r]) + 1.0;
  }
  if (cells_estimate <= static_cast<double>(opts.max_cells)) {
    const std::int64_t cells = static_cast<std::int64_t>(cells_estimate);
    std::vector<std::int64_t> stride(d, 1);
    for (int r = d - 2; r >= 0; --r) {
      stride[r] = stride[r + 1] * (inst.pool.capacities[r + 1] + 1);
    }
    std::vector<std::int64_t> offset(pcount, 0);
    for (std::size_t p = 0; p < pcount; ++p) {
      for (int r = 0; r < d; ++r) offset[p] += inst.sps[p].demand[r] * stride[r];
    }
    std::vector<double> value(static_cast<std::size_t>(cells), 0.0);
    std::vector<std::int16_t> choice(static_cast<std::size_t>(cells), -1);
    std::vector<std::int64_t> coord(d, 0);
    for (std::int64_t idx = 0; idx < cells; ++idx) {
      for (std::size_t p = 0; p < pcount; ++p) {
        bool covers = true;
        for (int r = 0; r < d; ++r) {
          if (coord[r] < inst.sps[p].demand[r]) {
            covers = false;
            break;
          }
        }
        if (!covers) continue;
        const double cand = value[static_cast<std::size_t>(idx - offset[p])] + w[p];
        if (cand > value[static_cast<std::size_t>(idx)]) {
          value[static_cast<std::size_t>(idx)] = cand;
          choice[static_cast<std::size_t>(idx)] = static_cast<std::int16_t>(p);
        }
      }
      for (int r = d - 1; r >= 0; --r) {
        if (++coord[r] <= inst.pool.capacities[r]) break;
        coord[r] = 0;
      }
    }
    ExactSolution out;
    out.n.assign(pcount, 0);
    std::int64_t idx = cells - 1;
    while (choice[static_cast<std::size_t>(idx)] >= 0) {
      const auto p = static_cast<std::size_t>(choice[static_cast<std::size_t>(idx)]);
      ++out.n[p];
      idx -= offset[p];
    }
    out.objective = value[static_cast<std::size_t>(cells - 1)];
    out.nodes_explored = cells;
    out.proven_optimal = true;
    return out;
  }

  double lattice_estimate = 1.0;
  for (std::size_t p = 0; p < pcount; ++p) {
    lattice_estimate *= static_cast<double>(full_pool_sessions(inst, p)) + 1.0;
  }
  if (lattice_estimate > static_cast<double>(opts.max_enumeration)) {
    throw BudgetError(
        "mdkp: capacity lattice has " + std::to_string(cells_estimate) + " cells (cap " +
        std::to_string(opts.max_cells) + ") and the session lattice has " +
        std::to_string(lattice_estimate) + " points (cap " +
        std::to_string(opts.max_enumeration) + ")");
  }
  return enumerate_linear(inst, w);
}

}  // namespace edgeslicer
