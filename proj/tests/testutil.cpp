#include "testutil.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace edgeslicer::testutil {

double Rng::log_uniform(double lo, double hi) {
  return std::exp(uniform(std::log(lo), std::log(hi)));
}

Instance random_instance(Rng& rng, int max_sps, int max_dims, std::int64_t max_capacity,
                         std::int64_t max_demand, double load_lo, double load_hi) {
  Instance inst;
  const int d = static_cast<int>(rng.range(1, max_dims));
  const int pcount = static_cast<int>(rng.range(1, max_sps));
  for (int r = 0; r < d; ++r) {
    inst.kinds.push_back({r, "r" + std::to_string(r), 1});
  }
  inst.pool.capacities.resize(d);
  std::vector<std::int64_t> max_z(d);
  for (int r = 0; r < d; ++r) {
    inst.pool.capacities[r] = rng.range(1, max_capacity);
    max_z[r] = std::min(max_demand, inst.pool.capacities[r]);
  }
  for (int p = 0; p < pcount; ++p) {
    SpProfile sp;
    sp.name = "sp" + std::to_string(p + 1);
    const double load = rng.log_uniform(load_lo, load_hi);
    sp.mu = rng.uniform(0.5, 5.0);
    sp.lambda = load * sp.mu;
    for (int r = 0; r < d; ++r) sp.demand.push_back(rng.range(1, max_z[r]));
    inst.sps.push_back(std::move(sp));
  }
  const double eps_cap = 1.0 / (1.0 + 2.0 * d);
  inst.epsilon = eps_cap * rng.uniform(0.05, 0.95);
  inst.u_edge = 2.0;
  inst.u_cloud = 1.0;
  inst.validate();
  return inst;
}

Instance g4dn_instance() {
  Instance inst;
  inst.kinds = {{0, "cpu", 1000}, {1, "ram", 1024}};
  inst.pool.capacities = {96000, 393216};
  inst.sps = {
      {"sp1", 20.0, 1.0, {1000, 2048}},
      {"sp2", 5.0, 10.0, {4000, 512}},
  };
  inst.epsilon = 0.01;
  inst.u_edge = 2.0;
  inst.u_cloud = 1.0;
  inst.validate();
  return inst;
}

namespace {

struct Tables {
  std::vector<double> w;
  std::vector<std::vector<double>> served;  // served[p][k]
  std::vector<std::int64_t> caps;           // N_p
};

Tables build_tables(const Instance& inst) {
  Tables t;
  t.w = weights(inst);
  const std::size_t pcount = inst.sps.size();
  t.served.resize(pcount);
  t.caps.resize(pcount);
  for (std::size_t p = 0; p < pcount; ++p) {
    t.caps[p] = full_pool_sessions(inst, p);
    t.served[p].resize(static_cast<std::size_t>(t.caps[p]) + 1);
    for (std::int64_t k = 0; k <= t.caps[p]; ++k) {
      t.served[p][static_cast<std::size_t>(k)] =
          served_prob(inst.sps[p].offered_load(), k);
    }
  }
  return t;
}

template <typename Value>
BestPoint enumerate_best(const Instance& inst, const Value& value_of) {
  const Tables t = build_tables(inst);
  const std::size_t pcount = inst.sps.size();
  const int d = inst.dims();
  SessionVector n(pcount, 0);
  std::vector<std::int64_t> used(d, 0);
  BestPoint best;
  best.n.assign(pcount, 0);
  best.value = -1.0;

  // Odometer over the lattice in lexicographic order; strict improvement
  // keeps the lexicographically smallest maximizer.
  while (true) {
    bool feasible = true;
    for (int r = 0; r < d; ++r) {
      if (used[r] > inst.pool.capacities[r]) {
        feasible = false;
        break;
      }
    }
    if (feasible) {
      ++best.points;
      const double v = value_of(t, n);
      if (v > best.value) {
        best.value = v;
        best.n = n;
      }
    }
    // advance: last SP fastest so the order is lexicographic in n
    std::size_t p = pcount;
    while (p > 0) {
      --p;
      if (n[p] < t.caps[p]) {
        ++n[p];
        for (int r = 0; r < d; ++r) used[r] += inst.sps[p].demand[r];
        break;
      }
      for (int r = 0; r < d; ++r) used[r] -= n[p] * inst.sps[p].demand[r];
      n[p] = 0;
      if (p == 0) return best;
    }
  }
}

}  // namespace

BestPoint enumerate_best_f(const Instance& inst) {
  return enumerate_best(inst, [](const Tables& t, const SessionVector& n) {
    double f = 0.0;
    for (std::size_t p = 0; p < n.size(); ++p) {
      f += t.w[p] * t.served[p][static_cast<std::size_t>(n[p])];
    }
    return f;
  });
}

BestPoint enumerate_best_linear(const Instance& inst) {
  return enumerate_best(inst, [](const Tables& t, const SessionVector& n) {
    double v = 0.0;
    for (std::size_t p = 0; p < n.size(); ++p) {
      v += t.w[p] * static_cast<double>(n[p]);
    }
    return v;
  });
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> cells;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string::npos) {
      cells.push_back(line.substr(start));
      return cells;
    }
    cells.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
}

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string::npos) end = text.size();
    lines.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  while (!lines.empty() && lines.back().empty()) lines.pop_back();
  return lines;
}

}  // namespace

CsvDiff compare_sweep_csv(const std::string& expected, const std::string& actual, double tol) {
  const std::vector<std::string> exp_lines = split_lines(expected);
  const std::vector<std::string> act_lines = split_lines(actual);
  CsvDiff diff;
  if (exp_lines.size() != act_lines.size()) {
    diff.ok = false;
    diff.message = "row count mismatch: expected " + std::to_string(exp_lines.size()) +
                   ", got " + std::to_string(act_lines.size());
    return diff;
  }
  if (exp_lines.empty()) return diff;
  const std::vector<std::string> header = split_csv_line(exp_lines[0]);
  if (exp_lines[0] != act_lines[0]) {
    diff.ok = false;
    diff.message = "header mismatch";
    return diff;
  }
  for (std::size_t row = 1; row < exp_lines.size(); ++row) {
    const std::vector<std::string> exp_cells = split_csv_line(exp_lines[row]);
    const std::vector<std::string> act_cells = split_csv_line(act_lines[row]);
    if (exp_cells.size() != act_cells.size() || exp_cells.size() != header.size()) {
      diff.ok = false;
      diff.message = "column count mismatch at row " + std::to_string(row);
      return diff;
    }
    for (std::size_t col = 0; col < exp_cells.size(); ++col) {
      if (header[col] == "wall_time_ms") continue;
      if (exp_cells[col] == act_cells[col]) continue;
      try {
        const double e = std::stod(exp_cells[col]);
        const double a = std::stod(act_cells[col]);
        if (std::abs(e - a) <= tol * std::max({1.0, std::abs(e), std::abs(a)})) continue;
      } catch (const std::exception&) {
      }
      diff.ok = false;
      diff.message = "row " + std::to_string(row) + ", column " + header[col] + ": expected '" +
                     exp_cells[col] + "', got '" + act_cells[col] + "'";
      return diff;
    }
  }
  return diff;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace edgeslicer::testutil
