#pragma once

#include <cstdint>
#include <stdexcept>

#include "edgeslicer/model.hpp"
#include "edgeslicer/objective.hpp"

namespace edgeslicer {

/// Thrown when an exact solve would exceed its configured search or memory
/// budget and no fallback applies.
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ExactSolution {
  SessionVector n;
  double objective = 0.0;
  std::int64_t nodes_explored = 0;
  bool proven_optimal = false;
};

struct ExactOptions {
  std::int64_t node_budget = 50'000'000;
  /// Upper-bound pruning on/off; off degenerates to plain lexicographic
  /// enumeration of the same tree. Both must return identical solutions.
  bool prune = true;
};

/// Desk-scale ground truth for the Erlang objective: lexicographic
/// depth-first enumeration of feasible session vectors with an admissible
/// upper-bound prune (each remaining SP capped by its best attainable
/// contribution in the residual pool). Ties resolve to the lexicographically
/// smallest optimum. Budget exhaustion returns the incumbent with
/// proven_optimal = false.
ExactSolution solve_exact_erlang(const Instance& inst, const ExactOptions& opts = {});

struct MdkpOptions {
  std::int64_t max_cells = 100'000'000;       // capacity-lattice DP cap
  std::int64_t max_enumeration = 10'000'000;  // fallback session-lattice cap
};

/// Maximizes the linear reward sum_p w_p * n_p under the capacity
/// constraints (general integer multi-dimensional knapsack). Uses an
/// unbounded-knapsack DP over the capacity lattice when it fits max_cells,
/// else enumerates session vectors; throws BudgetError naming both product
/// sizes when neither fits. The linear optimum generally differs from the
/// Erlang optimum.
ExactSolution solve_mdkp_linear(const Instance& inst, const MdkpOptions& opts = {});

}  // namespace edgeslicer
