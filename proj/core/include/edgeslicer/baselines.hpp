#pragma once

#include <optional>
#include <span>
#include <vector>

#include "edgeslicer/exact_solver.hpp"
#include "edgeslicer/model.hpp"

namespace edgeslicer {

struct HeuristicParams {
  double alpha = 1.0;  // greedy commitment fraction, in (0, 1]
  /// Per-copy rewards; defaults to the arrival-rate weights when absent.
  std::optional<std::vector<double>> xi;
};

/// Splits every resource in proportion to arrival rates: floor(w_p * K^r)
/// base units each, leftover units handed out by largest fractional
/// remainder (ties to the smaller SP index). Session counts derived from
/// the shares.
Allocation proportional_allocation(const Instance& inst);

/// Max copies of one demand vector fitting alone in the residual pool.
std::int64_t effective_capacity(std::span<const std::int64_t> remaining,
                                std::span<const std::int64_t> demand);

/// Effective-capacity greedy for the linear reward: each round picks the
/// eligible SP with the highest xi_p * effective capacity and commits
/// min(remaining copies, max(1, floor(alpha * effective capacity))) of it.
/// Always feasible; proven_optimal is never set.
ExactSolution greedy_heuristic(const Instance& inst, const HeuristicParams& params = {});

}  // namespace edgeslicer
