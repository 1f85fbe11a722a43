#include "edgeslicer/model.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <string>

namespace edgeslicer {

void Instance::validate() const {
  if (kinds.empty()) throw std::invalid_argument("at least one resource kind required");
  const int d = dims();
  for (int r = 0; r < d; ++r) {
    if (kinds[r].id != r) {
      throw std::invalid_argument("resource ids must be 0..d-1 in order");
    }
    if (kinds[r].unit_scale < 1) {
      throw std::invalid_argument("unit_scale must be >= 1 for resource " + kinds[r].label);
    }
  }
  if (pool.dims() != d) {
    throw std::invalid_argument("capacity vector length must match the resource count");
  }
  for (int r = 0; r < d; ++r) {
    if (pool.capacities[r] < 1) {
      throw std::invalid_argument("capacity must be >= 1 base unit for resource " +
                                  kinds[r].label);
    }
  }
  if (sps.empty()) throw std::invalid_argument("at least one SP required");
  for (const SpProfile& sp : sps) {
    if (!(sp.lambda > 0.0) || !std::isfinite(sp.lambda)) {
      throw std::invalid_argument("lambda must be a positive finite real for " + sp.name);
    }
    if (!(sp.mu > 0.0) || !std::isfinite(sp.mu)) {
      throw std::invalid_argument("mu must be a positive finite real for " + sp.name);
    }
    if (!std::isfinite(sp.offered_load())) {
      throw std::invalid_argument("offered load lambda/mu must be finite for " + sp.name);
    }
    if (static_cast<int>(sp.demand.size()) != d) {
      throw std::invalid_argument("demand vector length must match the resource count for " +
                                  sp.name);
    }
    for (int r = 0; r < d; ++r) {
      if (sp.demand[r] < 1) {
        throw std::invalid_argument("demand must be >= 1 base unit (" + sp.name + ", " +
                                    kinds[r].label + ")");
      }
      if (sp.demand[r] > pool.capacities[r]) {
        throw std::invalid_argument("per-session demand exceeds pool capacity (" + sp.name +
                                    ", " + kinds[r].label + ")");
      }
    }
  }
  const double eps_cap = 1.0 / (1.0 + 2.0 * d);
  if (!(epsilon > 0.0) || !(epsilon < eps_cap)) {
    throw std::invalid_argument("epsilon must lie in (0, 1/(1+2d)) = (0, " +
                                std::to_string(eps_cap) + ")");
  }
  if (!(u_edge > u_cloud) || !(u_cloud > 0.0)) {
    throw std::invalid_argument("utilities must satisfy u_edge > u_cloud > 0");
  }
}

std::int64_t max_sessions(std::span<const std::int64_t> theta_p,
                          std::span<const std::int64_t> demand_p) {
  if (theta_p.size() != demand_p.size()) {
    throw std::invalid_argument("theta and demand must have the same length");
  }
  if (theta_p.empty()) throw std::invalid_argument("empty resource vectors");
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  for (std::size_t r = 0; r < demand_p.size(); ++r) {
    if (demand_p[r] <= 0) throw std::invalid_argument("demand components must be >= 1");
    if (theta_p[r] < 0) throw std::invalid_argument("theta components must be >= 0");
    best = std::min(best, theta_p[r] / demand_p[r]);
  }
  return best;
}

std::int64_t full_pool_sessions(const Instance& inst, std::size_t p) {
  if (p >= inst.sps.size()) throw std::out_of_range("SP index out of range");
  return max_sessions(inst.pool.capacities, inst.sps[p].demand);
}

Allocation theta_from_n(const Instance& inst, std::span<const std::int64_t> n) {
  const std::size_t pcount = inst.sps.size();
  if (n.size() != pcount) throw std::invalid_argument("session vector length must equal P");
  const int d = inst.dims();
  Allocation alloc;
  alloc.n.assign(n.begin(), n.end());
  alloc.theta.assign(pcount, std::vector<std::int64_t>(d, 0));
  std::vector<std::int64_t> used(d, 0);
  for (std::size_t p = 0; p < pcount; ++p) {
    if (n[p] < 0) throw std::invalid_argument("session counts must be non-negative");
    for (int r = 0; r < d; ++r) {
      alloc.theta[p][r] = n[p] * inst.sps[p].demand[r];
      used[r] += alloc.theta[p][r];
    }
  }
  for (int r = 0; r < d; ++r) {
    if (used[r] > inst.pool.capacities[r]) {
      throw InfeasibleError("session vector infeasible: resource " + std::to_string(r) + " (" +
                            inst.kinds[r].label + ") needs " + std::to_string(used[r]) +
                            " base units, capacity " +
                            std::to_string(inst.pool.capacities[r]));
    }
  }
  return alloc;
}

std::vector<double> weights(const Instance& inst) {
  if (inst.sps.empty()) throw std::invalid_argument("at least one SP required");
  double total = 0.0;
  for (const SpProfile& sp : inst.sps) total += sp.lambda;
  std::vector<double> w(inst.sps.size());
  for (std::size_t p = 0; p < inst.sps.size(); ++p) w[p] = inst.sps[p].lambda / total;
  return w;
}

bool fits(const Instance& inst, std::span<const std::int64_t> n) {
  if (n.size() != inst.sps.size()) return false;
  const int d = inst.dims();
  for (int r = 0; r < d; ++r) {
    std::int64_t used = 0;
    for (std::size_t p = 0; p < n.size(); ++p) {
      if (n[p] < 0) return false;
      used += n[p] * inst.sps[p].demand[r];
    }
    if (used > inst.pool.capacities[r]) return false;
  }
  return true;
}

}  // namespace edgeslicer
