#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace edgeslicer {

/// Thrown when a requested session vector (or allocation derived from one)
/// does not fit the pool. The message names the first violated resource.
class InfeasibleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// One resource dimension of the edge node. All quantities inside the
/// library are integer base units; `unit_scale` converts from the display
/// unit used in config files (e.g. 1000 millicores per vCPU, 1024 MB per GB).
struct ResourceKind {
  int id = 0;
  std::string label;
  std::int64_t unit_scale = 1;
};

struct ResourcePool {
  std::vector<std::int64_t> capacities;  // base units, one entry per resource

  int dims() const { return static_cast<int>(capacities.size()); }
};

/// A tenant (service provider) competing for edge capacity.
struct SpProfile {
  std::string name;
  double lambda = 0.0;               // session arrival rate, users/s
  double mu = 0.0;                   // service rate, users/s (1 / mean holding time)
  std::vector<std::int64_t> demand;  // base units required per session, per resource

  double offered_load() const { return lambda / mu; }
};

struct Instance {
  std::vector<ResourceKind> kinds;
  ResourcePool pool;
  std::vector<SpProfile> sps;
  double epsilon = 0.01;  // streaming solver accuracy knob, in (0, 1/(1+2d))
  double u_edge = 2.0;    // utility of an edge session, U_E > U_C > 0
  double u_cloud = 1.0;   // utility of a cloud session

  int dims() const { return static_cast<int>(kinds.size()); }
  int sp_count() const { return static_cast<int>(sps.size()); }

  /// Throws std::invalid_argument on the first violated invariant.
  void validate() const;
};

/// Session counts plus the induced tight per-tenant resource shares.
struct Allocation {
  std::vector<std::int64_t> n;                   // sessions per SP
  std::vector<std::vector<std::int64_t>> theta;  // P x d, base units
};

/// floor(min_r theta_p[r] / demand_p[r]); 0 when any dimension is short.
/// Rejects demand vectors containing a zero.
std::int64_t max_sessions(std::span<const std::int64_t> theta_p,
                          std::span<const std::int64_t> demand_p);

/// Sessions SP p could run if it owned the whole pool.
std::int64_t full_pool_sessions(const Instance& inst, std::size_t p);

/// Tight inverse of the session-count constraint: theta_p = n_p * demand_p.
/// Throws InfeasibleError naming the first resource over capacity.
Allocation theta_from_n(const Instance& inst, std::span<const std::int64_t> n);

/// Arrival-rate shares w_p = lambda_p / sum(lambda); sums to 1.
std::vector<double> weights(const Instance& inst);

/// True when sum_p n_p * demand_p fits the pool in every dimension.
bool fits(const Instance& inst, std::span<const std::int64_t> n);

}  // namespace edgeslicer
