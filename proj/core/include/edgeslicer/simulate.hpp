#pragma once

#include <cstdint>
#include <vector>

#include "edgeslicer/model.hpp"
#include "edgeslicer/objective.hpp"

namespace edgeslicer {

enum class HoldingTime { Exponential, Deterministic };

struct SimConfig {
  double horizon = 0.0;  // simulated seconds; must exceed warmup
  double warmup = 0.0;   // excluded from statistics
  std::uint64_t seed = 0;
  int replications = 1;
  HoldingTime holding = HoldingTime::Exponential;
};

struct SpSimStats {
  std::int64_t arrivals = 0;  // counted after warmup
  std::int64_t blocked = 0;
  double empirical_b = 0.0;
  double ci_halfwidth = 0.0;  // 95% normal approximation
};

struct Replication {
  std::vector<SpSimStats> per_sp;
  double empirical_f = 0.0;  // sum_p w_p * (1 - empirical_b_p), configured weights
};

struct SimReport {
  std::vector<Replication> replications;
  Replication aggregate;  // pooled arrival/blocked counts across replications
};

/// Event-driven Monte Carlo of the loss system: per SP, Poisson arrivals,
/// n_p servers, no queue; an arrival finding every server busy is blocked.
/// SPs are independent once n is fixed; each (replication, SP) pair draws
/// from its own stream split off the master seed, so reports are
/// bit-identical for a fixed seed regardless of thread count.
/// Rejects session vectors that do not fit the pool.
SimReport simulate(const Instance& inst, const SessionVector& n, const SimConfig& cfg);

}  // namespace edgeslicer
