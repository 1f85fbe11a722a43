#include "edgeslicer/sweep.hpp"

#include <chrono>
#include <cmath>
#include <ostream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "edgeslicer/config.hpp"
#include "edgeslicer/erlang.hpp"
#include "edgeslicer/parallel.hpp"
#include "edgeslicer/text.hpp"

namespace edgeslicer {

using nlohmann::json;

std::string algo_name(Algo a) {
  switch (a) {
    case Algo::Stream: return "stream";
    case Algo::Exact: return "exact";
    case Algo::Mdkp: return "mdkp";
    case Algo::Prop: return "prop";
    case Algo::Greedy: return "greedy";
  }
  return "stream";
}

Algo parse_algo(const std::string& name) {
  if (name == "stream") return Algo::Stream;
  if (name == "exact") return Algo::Exact;
  if (name == "mdkp") return Algo::Mdkp;
  if (name == "prop") return Algo::Prop;
  if (name == "greedy") return Algo::Greedy;
  throw std::invalid_argument("unknown algorithm '" + name +
                              "' (expected stream, exact, mdkp, prop or greedy)");
}

namespace {

std::vector<double> blocking_per_sp(const Instance& inst, const SessionVector& n) {
  std::vector<double> b(n.size());
  for (std::size_t p = 0; p < n.size(); ++p) {
    b[p] = erlang_b(inst.sps[p].offered_load(), n[p]);
  }
  return b;
}

std::vector<double> utilization_per_resource(const Instance& inst, const SessionVector& n) {
  std::vector<double> util(inst.dims());
  for (int r = 0; r < inst.dims(); ++r) {
    std::int64_t used = 0;
    for (std::size_t p = 0; p < n.size(); ++p) used += n[p] * inst.sps[p].demand[r];
    util[r] = static_cast<double>(used) / static_cast<double>(inst.pool.capacities[r]);
  }
  return util;
}

}  // namespace

SolveResult run_solve(const Instance& inst, Algo algo, const ItemOrder& order, double alpha) {
  SolveResult result;
  result.algo = algo;
  switch (algo) {
    case Algo::Stream: {
      StreamSolution sol = solve_stream(inst, order);
      result.n = sol.n;
      result.f = sol.f;
      result.threshold_used = sol.threshold_used;
      result.items_scanned = sol.items_scanned;
      break;
    }
    case Algo::Exact: {
      ExactSolution sol = solve_exact_erlang(inst);
      result.n = sol.n;
      result.f = eval_f(inst, sol.n);
      result.proven_optimal = sol.proven_optimal;
      result.nodes_explored = sol.nodes_explored;
      break;
    }
    case Algo::Mdkp: {
      ExactSolution sol = solve_mdkp_linear(inst);
      result.n = sol.n;
      result.f = eval_f(inst, sol.n);
      result.proven_optimal = sol.proven_optimal;
      result.nodes_explored = sol.nodes_explored;
      result.linear_objective = sol.objective;
      break;
    }
    case Algo::Prop: {
      Allocation alloc = proportional_allocation(inst);
      result.n = alloc.n;
      result.f = eval_f(inst, alloc.n);
      break;
    }
    case Algo::Greedy: {
      HeuristicParams params;
      params.alpha = alpha;
      ExactSolution sol = greedy_heuristic(inst, params);
      result.n = sol.n;
      result.f = eval_f(inst, sol.n);
      result.linear_objective = sol.objective;
      result.alpha = alpha;
      result.xi = weights(inst);
      result.xi_defaulted = true;
      break;
    }
  }
  result.allocation = theta_from_n(inst, result.n);
  result.blocking = blocking_per_sp(inst, result.n);
  result.utilization = utilization_per_resource(inst, result.n);
  result.expected_utility = (inst.u_edge - inst.u_cloud) * result.f.f + inst.u_cloud;
  return result;
}

std::string solve_json(const Instance& inst, const SolveResult& result) {
  json out;
  out["algo"] = algo_name(result.algo);
  json names = json::array();
  for (const SpProfile& sp : inst.sps) names.push_back(sp.name);
  out["sps"] = std::move(names);
  out["n"] = result.n;
  out["theta"] = result.allocation.theta;
  out["f"] = result.f.f;
  out["per_sp_f"] = result.f.per_sp;
  out["per_sp_blocking"] = result.blocking;
  out["utilization"] = result.utilization;
  out["expected_utility"] = result.expected_utility;
  if (result.threshold_used) out["threshold_used"] = *result.threshold_used;
  if (result.items_scanned) out["items_scanned"] = *result.items_scanned;
  if (result.proven_optimal) out["proven_optimal"] = *result.proven_optimal;
  if (result.nodes_explored) out["nodes_explored"] = *result.nodes_explored;
  if (result.linear_objective) out["linear_objective"] = *result.linear_objective;
  if (result.alpha) out["alpha"] = *result.alpha;
  if (result.xi) {
    out["xi"] = *result.xi;
    out["xi_source"] = result.xi_defaulted ? "weights-default" : "explicit";
  }
  return out.dump(2);
}

namespace {

std::size_t resource_index(const Instance& inst, const std::string& token,
                           const std::string& path) {
  for (std::size_t r = 0; r < inst.kinds.size(); ++r) {
    if (inst.kinds[r].label == token) return r;
  }
  try {
    const std::size_t r = std::stoul(token);
    if (r < inst.kinds.size()) return r;
  } catch (const std::exception&) {
  }
  throw ConfigError(path, "unknown resource '" + token + "'");
}

}  // namespace

void apply_parameter(Instance& inst, const std::string& path, double value) {
  if (path == "epsilon") {
    inst.epsilon = value;
  } else if (path == "u_edge") {
    inst.u_edge = value;
  } else if (path == "u_cloud") {
    inst.u_cloud = value;
  } else if (path.rfind("capacities[", 0) == 0 && path.back() == ']') {
    const std::string token = path.substr(11, path.size() - 12);
    const std::size_t r = resource_index(inst, token, path);
    const double product = value * static_cast<double>(inst.kinds[r].unit_scale);
    const double rounded = std::round(product);
    if (std::abs(product - rounded) > 1e-9 * std::max(1.0, std::abs(product))) {
      throw ConfigError(path, "value is not a whole number of base units");
    }
    inst.pool.capacities[r] = static_cast<std::int64_t>(rounded);
  } else if (path.rfind("sps[", 0) == 0) {
    const std::size_t close = path.find(']');
    if (close == std::string::npos || close + 1 >= path.size() || path[close + 1] != '.') {
      throw ConfigError(path, "malformed SP path (expected sps[<i>].<field>)");
    }
    std::size_t p = 0;
    try {
      p = std::stoul(path.substr(4, close - 4));
    } catch (const std::exception&) {
      throw ConfigError(path, "malformed SP index");
    }
    if (p >= inst.sps.size()) throw ConfigError(path, "SP index out of range");
    const std::string field = path.substr(close + 2);
    if (field == "lambda") {
      inst.sps[p].lambda = value;
    } else if (field == "mu") {
      inst.sps[p].mu = value;
    } else if (field.rfind("demand[", 0) == 0 && field.back() == ']') {
      const std::string token = field.substr(7, field.size() - 8);
      const std::size_t r = resource_index(inst, token, path);
      const double product = value * static_cast<double>(inst.kinds[r].unit_scale);
      const double rounded = std::round(product);
      if (std::abs(product - rounded) > 1e-9 * std::max(1.0, std::abs(product))) {
        throw ConfigError(path, "value is not a whole number of base units");
      }
      inst.sps[p].demand[r] = static_cast<std::int64_t>(rounded);
    } else {
      throw ConfigError(path, "unknown SP field '" + field + "'");
    }
  } else {
    throw ConfigError(path, "unresolvable parameter path");
  }
  try {
    inst.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(path, e.what());
  }
}

std::vector<SweepRow> run_sweep(const Instance& inst, const SweepSpec& spec) {
  inst.validate();
  if (spec.algos.empty()) throw std::invalid_argument("sweep needs at least one algorithm");
  if (spec.param1.values.empty()) throw std::invalid_argument("sweep needs at least one value");
  if (spec.param2 && spec.param2->values.empty()) {
    throw std::invalid_argument("second sweep parameter has no values");
  }

  struct Point {
    double v1;
    std::optional<double> v2;
  };
  std::vector<Point> points;
  for (double v1 : spec.param1.values) {
    if (spec.param2) {
      for (double v2 : spec.param2->values) points.push_back({v1, v2});
    } else {
      points.push_back({v1, std::nullopt});
    }
  }

  const std::size_t per_point = spec.algos.size();
  std::vector<SweepRow> rows(points.size() * per_point);
  parallel_for(points.size(), [&](std::size_t i) {
    Instance local = inst;
    apply_parameter(local, spec.param1.path, points[i].v1);
    if (points[i].v2) apply_parameter(local, spec.param2->path, *points[i].v2);
    for (std::size_t k = 0; k < per_point; ++k) {
      const auto start = std::chrono::steady_clock::now();
      SolveResult solved = run_solve(local, spec.algos[k], spec.order, spec.alpha);
      const auto stop = std::chrono::steady_clock::now();
      SweepRow& row = rows[i * per_point + k];
      row.param1 = points[i].v1;
      row.param2 = points[i].v2;
      row.algo = spec.algos[k];
      row.n = std::move(solved.n);
      row.f = std::move(solved.f);
      row.blocking = std::move(solved.blocking);
      row.utilization = std::move(solved.utilization);
      row.wall_time_ms = std::chrono::duration<double, std::milli>(stop - start).count();
    }
  });
  return rows;
}

void write_sweep_csv(std::ostream& out, const Instance& inst,
                     const std::vector<SweepRow>& rows) {
  out << "param1,param2,algo,f";
  for (const SpProfile& sp : inst.sps) out << ",f_" << sp.name;
  for (const SpProfile& sp : inst.sps) out << ",B_" << sp.name;
  for (const ResourceKind& kind : inst.kinds) out << ",util_" << kind.label;
  for (const SpProfile& sp : inst.sps) out << ",n_" << sp.name;
  out << ",wall_time_ms\n";
  for (const SweepRow& row : rows) {
    out << format_real(row.param1) << ',';
    if (row.param2) out << format_real(*row.param2);
    out << ',' << algo_name(row.algo) << ',' << format_real(row.f.f);
    for (double v : row.f.per_sp) out << ',' << format_real(v);
    for (double v : row.blocking) out << ',' << format_real(v);
    for (double v : row.utilization) out << ',' << format_real(v);
    for (std::int64_t v : row.n) out << ',' << format_int(v);
    out << ',' << format_real(row.wall_time_ms) << '\n';
  }
}

std::string sweep_csv(const Instance& inst, const std::vector<SweepRow>& rows) {
  std::ostringstream out;
  write_sweep_csv(out, inst, rows);
  return out.str();
}

std::string sweep_json(const Instance& inst, const std::vector<SweepRow>& rows) {
  json out = json::array();
  for (const SweepRow& row : rows) {
    json entry;
    entry["param1"] = row.param1;
    if (row.param2) entry["param2"] = *row.param2;
    entry["algo"] = algo_name(row.algo);
    entry["f"] = row.f.f;
    json per_f = json::object();
    json per_b = json::object();
    json per_n = json::object();
    for (std::size_t p = 0; p < inst.sps.size(); ++p) {
      per_f[inst.sps[p].name] = row.f.per_sp[p];
      per_b[inst.sps[p].name] = row.blocking[p];
      per_n[inst.sps[p].name] = row.n[p];
    }
    entry["per_sp_f"] = per_f;
    entry["per_sp_blocking"] = per_b;
    entry["n"] = per_n;
    json util = json::object();
    for (int r = 0; r < inst.dims(); ++r) util[inst.kinds[r].label] = row.utilization[r];
    entry["utilization"] = util;
    entry["wall_time_ms"] = row.wall_time_ms;
    out.push_back(std::move(entry));
  }
  return out.dump(2);
}

VerifyReport verify_bound(const Instance& inst, std::int64_t scale, const ItemOrder& order,
                          const ExactOptions& oracle_opts) {
  if (scale < 1) throw std::invalid_argument("scale must be >= 1");
  Instance replica = inst;
  for (int r = 0; r < replica.dims(); ++r) {
    replica.pool.capacities[r] = std::max<std::int64_t>(1, inst.pool.capacities[r] / scale);
    for (const SpProfile& sp : replica.sps) {
      if (sp.demand[r] > replica.pool.capacities[r]) {
        throw InfeasibleError("scaled capacity for resource " + replica.kinds[r].label +
                              " is below the per-session demand of " + sp.name);
      }
    }
  }
  ExactSolution oracle = solve_exact_erlang(replica, oracle_opts);
  if (!oracle.proven_optimal) {
    throw BudgetError("exact oracle exhausted its node budget on the scaled replica");
  }
  StreamSolution stream = solve_stream(replica, order);

  VerifyReport report;
  report.scale = scale;
  report.opt = oracle.objective;
  report.f_stream = stream.f.f;
  const double ratio = 1.0 / (1.0 + 2.0 * replica.dims()) - replica.epsilon;
  report.bound = ratio * oracle.objective;
  report.pass = report.f_stream >= report.bound - 1e-12;
  report.n_opt = oracle.n;
  report.n_stream = stream.n;
  return report;
}

std::string verify_json(const VerifyReport& report) {
  json out;
  out["scale"] = report.scale;
  out["opt"] = report.opt;
  out["f_stream"] = report.f_stream;
  out["bound"] = report.bound;
  out["pass"] = report.pass;
  out["n_opt"] = report.n_opt;
  out["n_stream"] = report.n_stream;
  return out.dump(2);
}

std::string simulate_json(const Instance& inst, const SessionVector& n,
                          const SimConfig& cfg, const SimReport& report) {
  json out;
  out["n"] = n;
  out["horizon"] = cfg.horizon;
  out["warmup"] = cfg.warmup;
  out["seed"] = cfg.seed;
  out["replications"] = cfg.replications;
  out["holding"] = cfg.holding == HoldingTime::Exponential ? "exponential" : "deterministic";

  const auto rep_json = [&](const Replication& rep) {
    json entry;
    entry["empirical_f"] = rep.empirical_f;
    entry["per_sp"] = json::array();
    for (std::size_t p = 0; p < rep.per_sp.size(); ++p) {
      const SpSimStats& s = rep.per_sp[p];
      entry["per_sp"].push_back({{"name", inst.sps[p].name},
                                 {"arrivals", s.arrivals},
                                 {"blocked", s.blocked},
                                 {"empirical_B", s.empirical_b},
                                 {"ci_halfwidth", s.ci_halfwidth}});
    }
    return entry;
  };
  out["aggregate"] = rep_json(report.aggregate);
  out["replications_detail"] = json::array();
  for (const Replication& rep : report.replications) {
    out["replications_detail"].push_back(rep_json(rep));
  }
  return out.dump(2);
}

}  // namespace edgeslicer
