#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "edgeslicer/baselines.hpp"
#include "edgeslicer/exact_solver.hpp"
#include "edgeslicer/model.hpp"
#include "edgeslicer/objective.hpp"
#include "edgeslicer/simulate.hpp"
#include "edgeslicer/stream_solver.hpp"

namespace edgeslicer {

enum class Algo { Stream, Exact, Mdkp, Prop, Greedy };

std::string algo_name(Algo a);
Algo parse_algo(const std::string& name);

/// One solve by any algorithm, with the derived reporting fields every
/// emitter needs.
struct SolveResult {
  Algo algo = Algo::Stream;
  SessionVector n;
  ObjectiveValue f;
  Allocation allocation;             // tight theta = n * demand
  std::vector<double> blocking;      // B(A_p, n_p) per SP
  std::vector<double> utilization;   // sum_p n_p z_p^r / K^r per resource
  double expected_utility = 0.0;
  // algorithm-specific extras
  std::optional<double> threshold_used;
  std::optional<std::int64_t> items_scanned;
  std::optional<bool> proven_optimal;
  std::optional<std::int64_t> nodes_explored;
  std::optional<double> linear_objective;  // mdkp / greedy reward
  std::optional<double> alpha;
  std::optional<std::vector<double>> xi;  // greedy rewards actually used
  bool xi_defaulted = false;              // true when xi fell back to w_p
};

SolveResult run_solve(const Instance& inst, Algo algo,
                      const ItemOrder& order = {}, double alpha = 1.0);

std::string solve_json(const Instance& inst, const SolveResult& result);

/// Writes `value` through a parameter path into the instance. Supported
/// paths: "epsilon", "u_edge", "u_cloud", "sps[<i>].lambda",
/// "sps[<i>].mu", "sps[<i>].demand[<label|index>]",
/// "capacities[<label|index>]". Demand and capacity values are display
/// units. Throws ConfigError naming the failing segment.
void apply_parameter(Instance& inst, const std::string& path, double value);

struct SweepParameter {
  std::string path;
  std::vector<double> values;
};

struct SweepSpec {
  SweepParameter param1;
  std::optional<SweepParameter> param2;  // grid sweeps for heat maps
  std::vector<Algo> algos;
  ItemOrder order;
  double alpha = 1.0;
};

struct SweepRow {
  double param1 = 0.0;
  std::optional<double> param2;
  Algo algo = Algo::Stream;
  SessionVector n;
  ObjectiveValue f;
  std::vector<double> blocking;
  std::vector<double> utilization;
  double wall_time_ms = 0.0;
};

/// One row per grid point per algorithm, in lexicographic grid order
/// (param1 outer, param2 inner, algorithms as listed). Grid points are
/// evaluated in parallel under the EDGE_SLICER_THREADS cap; ordering of the
/// returned rows never depends on scheduling.
std::vector<SweepRow> run_sweep(const Instance& inst, const SweepSpec& spec);

void write_sweep_csv(std::ostream& out, const Instance& inst,
                     const std::vector<SweepRow>& rows);
std::string sweep_csv(const Instance& inst, const std::vector<SweepRow>& rows);
std::string sweep_json(const Instance& inst, const std::vector<SweepRow>& rows);

struct VerifyReport {
  std::int64_t scale = 1;
  double opt = 0.0;
  double f_stream = 0.0;
  double bound = 0.0;  // (1/(1+2d) - epsilon) * opt
  bool pass = false;
  SessionVector n_opt;
  SessionVector n_stream;
};

/// Runs the streaming solver against the exact oracle on a replica whose
/// capacities are divided by `scale`, and checks the approximation bound.
/// Oracle budget exhaustion raises BudgetError instead of passing silently.
VerifyReport verify_bound(const Instance& inst, std::int64_t scale,
                          const ItemOrder& order = {},
                          const ExactOptions& oracle_opts = {});

std::string verify_json(const VerifyReport& report);

std::string simulate_json(const Instance& inst, const SessionVector& n,
                          const SimConfig& cfg, const SimReport& report);

}  // namespace edgeslicer
