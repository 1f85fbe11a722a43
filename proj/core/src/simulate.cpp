#include "edgeslicer/simulate.hpp"

#include <cmath>
#include <queue>
#include <random>
#include <stdexcept>

#include "edgeslicer/parallel.hpp"

namespace edgeslicer {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// Stream split: one independent engine per (replication, SP) derived from
// the master seed, so scheduling cannot change any draw.
std::mt19937_64 make_engine(std::uint64_t master, std::size_t replication, std::size_t sp) {
  const std::uint64_t mixed =
      splitmix64(splitmix64(master ^ (0xA0761D6478BD642FULL * (replication + 1))) ^
                 (0xE7037ED1A0B428DBULL * (sp + 1)));
  return std::mt19937_64(mixed);
}

double unit_open(std::mt19937_64& rng) {
  // (0, 1]: safe argument for log.
  return (static_cast<double>(rng() >> 11) + 1.0) * 0x1.0p-53;
}

double exp_sample(std::mt19937_64& rng, double rate) {
  return -std::log(unit_open(rng)) / rate;
}

SpSimStats run_sp(const SpProfile& sp, std::int64_t servers, const SimConfig& cfg,
                  std::mt19937_64 rng) {
  SpSimStats stats;
  std::priority_queue<double, std::vector<double>, std::greater<>> departures;
  const double mean_holding = 1.0 / sp.mu;
  double t = exp_sample(rng, sp.lambda);
  while (t <= cfg.horizon) {
    while (!departures.empty() && departures.top() <= t) departures.pop();
    const bool counted = t > cfg.warmup;
    if (counted) ++stats.arrivals;
    if (static_cast<std::int64_t>(departures.size()) < servers) {
      const double holding = cfg.holding == HoldingTime::Exponential
                                 ? exp_sample(rng, sp.mu)
                                 : mean_holding;
      departures.push(t + holding);
    } else if (counted) {
      ++stats.blocked;
    }
    t += exp_sample(rng, sp.lambda);
  }
  if (stats.arrivals > 0) {
    stats.empirical_b =
        static_cast<double>(stats.blocked) / static_cast<double>(stats.arrivals);
    stats.ci_halfwidth = 1.96 * std::sqrt(stats.empirical_b * (1.0 - stats.empirical_b) /
                                          static_cast<double>(stats.arrivals));
  }
  return stats;
}

double weighted_served(const std::vector<double>& w, const std::vector<SpSimStats>& per_sp) {
  // Kahan summation: the aggregation must not depend on grouping.
  double sum = 0.0;
  double carry = 0.0;
  for (std::size_t p = 0; p < per_sp.size(); ++p) {
    const double term = w[p] * (1.0 - per_sp[p].empirical_b) - carry;
    const double next = sum + term;
    carry = (next - sum) - term;
    sum = next;
  }
  return sum;
}

}  // namespace

SimReport simulate(const Instance& inst, const SessionVector& n, const SimConfig& cfg) {
  inst.validate();
  if (!(cfg.horizon > cfg.warmup) || cfg.warmup < 0.0) {
    throw std::invalid_argument("horizon must exceed warmup and warmup must be >= 0");
  }
  if (cfg.replications < 1) throw std::invalid_argument("replications must be >= 1");
  if (n.size() != inst.sps.size()) {
    throw std::invalid_argument("session vector length must equal P");
  }
  if (!fits(inst, n)) {
    throw InfeasibleError("session vector does not fit the pool");
  }

  const std::vector<double> w = weights(inst);
  const std::size_t pcount = inst.sps.size();
  SimReport report;
  report.replications.resize(static_cast<std::size_t>(cfg.replications));

  parallel_for(static_cast<std::size_t>(cfg.replications), [&](std::size_t rep) {
    Replication& out = report.replications[rep];
    out.per_sp.resize(pcount);
    for (std::size_t p = 0; p < pcount; ++p) {
      out.per_sp[p] = run_sp(inst.sps[p], n[p], cfg, make_engine(cfg.seed, rep, p));
    }
    out.empirical_f = weighted_served(w, out.per_sp);
  });

  report.aggregate.per_sp.resize(pcount);
  for (std::size_t p = 0; p < pcount; ++p) {
    SpSimStats& agg = report.aggregate.per_sp[p];
    for (const Replication& rep : report.replications) {
      agg.arrivals += rep.per_sp[p].arrivals;
      agg.blocked += rep.per_sp[p].blocked;
    }
    if (agg.arrivals > 0) {
      agg.empirical_b = static_cast<double>(agg.blocked) / static_cast<double>(agg.arrivals);
      agg.ci_halfwidth = 1.96 * std::sqrt(agg.empirical_b * (1.0 - agg.empirical_b) /
                                          static_cast<double>(agg.arrivals));
    }
  }
  report.aggregate.empirical_f = weighted_served(w, report.aggregate.per_sp);
  return report;
}

}  // namespace edgeslicer
