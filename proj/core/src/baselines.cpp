#include "edgeslicer/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace edgeslicer {

Allocation proportional_allocation(const Instance& inst) {
  inst.validate();
  const std::size_t pcount = inst.sps.size();
  const int d = inst.dims();
  const std::vector<double> w = weights(inst);

  Allocation alloc;
  alloc.theta.assign(pcount, std::vector<std::int64_t>(d, 0));
  alloc.n.assign(pcount, 0);

  for (int r = 0; r < d; ++r) {
    const auto cap = static_cast<double>(inst.pool.capacities[r]);
    std::int64_t assigned = 0;
    std::vector<double> remainder(pcount);
    for (std::size_t p = 0; p < pcount; ++p) {
      const double share = w[p] * cap;
      const auto units = static_cast<std::int64_t>(std::floor(share));
      alloc.theta[p][r] = units;
      remainder[p] = share - static_cast<double>(units);
      assigned += units;
    }
    // Largest fractional remainder takes the leftover units, ties to the
    // smaller SP index.
    std::vector<std::size_t> order(pcount);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return remainder[a] > remainder[b]; });
    std::int64_t leftover = inst.pool.capacities[r] - assigned;
    for (std::size_t i = 0; leftover > 0; i = (i + 1) % pcount) {
      ++alloc.theta[order[i]][r];
      --leftover;
    }
  }
  for (std::size_t p = 0; p < pcount; ++p) {
    alloc.n[p] = max_sessions(alloc.theta[p], inst.sps[p].demand);
  }
  return alloc;
}

std::int64_t effective_capacity(std::span<const std::int64_t> remaining,
                                std::span<const std::int64_t> demand) {
  if (remaining.size() != demand.size()) {
    throw std::invalid_argument("remaining and demand must have the same length");
  }
  std::int64_t cap = std::numeric_limits<std::int64_t>::max();
  for (std::size_t r = 0; r < demand.size(); ++r) {
    if (demand[r] <= 0) throw std::invalid_argument("demand components must be >= 1");
    if (remaining[r] < 0) throw std::invalid_argument("remaining capacity must be >= 0");
    cap = std::min(cap, remaining[r] / demand[r]);
  }
  return cap;
}

ExactSolution greedy_heuristic(const Instance& inst, const HeuristicParams& params) {
  inst.validate();
  if (!(params.alpha > 0.0) || !(params.alpha <= 1.0)) {
    throw std::invalid_argument("alpha must lie in (0, 1]");
  }
  const std::size_t pcount = inst.sps.size();
  const int d = inst.dims();
  const std::vector<double> w = weights(inst);
  const std::vector<double>& xi = params.xi ? *params.xi : w;
  if (xi.size() != pcount) throw std::invalid_argument("xi must have one entry per SP");

  std::vector<std::int64_t> remaining = inst.pool.capacities;
  std::vector<std::int64_t> copies_left(pcount);
  std::vector<bool> eligible(pcount, true);
  for (std::size_t p = 0; p < pcount; ++p) copies_left[p] = full_pool_sessions(inst, p);

  ExactSolution out;
  out.n.assign(pcount, 0);
  while (true) {
    std::size_t pick = pcount;
    double best_reward = -std::numeric_limits<double>::infinity();
    std::int64_t pick_cap = 0;
    for (std::size_t p = 0; p < pcount; ++p) {
      if (!eligible[p] || copies_left[p] == 0) continue;
      const std::int64_t cap = effective_capacity(remaining, inst.sps[p].demand);
      if (cap == 0) continue;
      const double reward = xi[p] * static_cast<double>(cap);
      if (reward > best_reward) {
        best_reward = reward;
        pick = p;
        pick_cap = cap;
      }
    }
    if (pick == pcount) break;
    const auto scaled =
        static_cast<std::int64_t>(std::floor(params.alpha * static_cast<double>(pick_cap)));
    const std::int64_t take = std::min(copies_left[pick], std::max<std::int64_t>(1, scaled));
    out.n[pick] += take;
    copies_left[pick] -= take;
    for (int r = 0; r < d; ++r) remaining[r] -= take * inst.sps[pick].demand[r];
    if (copies_left[pick] == 0 || params.alpha == 1.0) eligible[pick] = false;
    ++out.nodes_explored;  // loop iterations, bounded by sum_p N_p
  }
  for (std::size_t p = 0; p < pcount; ++p) {
    out.objective += w[p] * static_cast<double>(out.n[p]);
  }
  out.proven_optimal = false;
  return out;
}

}  // namespace edgeslicer
