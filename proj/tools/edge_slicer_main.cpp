#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "edgeslicer/config.hpp"
#include "edgeslicer/erlang.hpp"
#include "edgeslicer/sweep.hpp"
#include "edgeslicer/text.hpp"

namespace {

using namespace edgeslicer;

void emit(const std::string& out_path, const std::string& payload) {
  if (out_path.empty() || out_path == "-") {
    std::cout << payload;
    if (!payload.empty() && payload.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file " + out_path);
  out << payload;
}

std::vector<double> parse_values(const std::string& csv) {
  std::vector<double> values;
  std::stringstream stream(csv);
  std::string token;
  while (std::getline(stream, token, ',')) {
    if (!token.empty()) values.push_back(std::stod(token));
  }
  return values;
}

std::vector<double> parse_range(const std::string& text) {
  // start:stop:step, inclusive of stop up to a half-step of float slack.
  std::vector<double> parts;
  std::stringstream stream(text);
  std::string token;
  while (std::getline(stream, token, ':')) parts.push_back(std::stod(token));
  if (parts.size() != 3 || parts[2] <= 0.0) {
    throw std::invalid_argument("range must be start:stop:step with step > 0");
  }
  std::vector<double> values;
  for (double v = parts[0]; v <= parts[1] + parts[2] * 0.5; v += parts[2]) {
    values.push_back(v);
  }
  if (values.empty()) throw std::invalid_argument("range is empty");
  return values;
}

std::vector<std::int64_t> parse_counts(const std::string& csv) {
  std::vector<std::int64_t> values;
  std::stringstream stream(csv);
  std::string token;
  while (std::getline(stream, token, ',')) {
    if (!token.empty()) values.push_back(std::stoll(token));
  }
  return values;
}

SweepParameter make_parameter(const std::string& path, const std::string& values,
                              const std::string& range) {
  if (values.empty() == range.empty()) {
    throw std::invalid_argument("give exactly one of --values/--range per parameter");
  }
  SweepParameter param;
  param.path = path;
  param.values = values.empty() ? parse_range(range) : parse_values(values);
  return param;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Edge resource partitioning across service providers"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_path = "-";
  std::string order_text = "round-robin";
  std::string algo_text = "stream";
  std::string format = "csv";
  double alpha = 1.0;

  auto* solve = app.add_subcommand("solve", "Solve one instance and print the solution JSON");
  solve->add_option("--config", config_path, "Instance config JSON")->required();
  solve->add_option("--algo", algo_text, "stream|exact|mdkp|prop|greedy");
  solve->add_option("--order", order_text, "round-robin|sequential|seeded:<u64>");
  solve->add_option("--alpha", alpha, "greedy commitment fraction in (0,1]");
  solve->add_option("--out", out_path, "output path or - for stdout");

  std::string p1_path, p1_values, p1_range;
  std::string p2_path, p2_values, p2_range;
  std::string algos_text = "stream";
  auto* sweep = app.add_subcommand("sweep", "Run a 1-D or 2-D parameter sweep");
  sweep->add_option("--config", config_path, "Instance config JSON")->required();
  sweep->add_option("--param", p1_path, "first parameter path, e.g. sps[0].lambda")->required();
  sweep->add_option("--values", p1_values, "comma-separated values");
  sweep->add_option("--range", p1_range, "start:stop:step");
  sweep->add_option("--param2", p2_path, "optional second parameter path");
  sweep->add_option("--values2", p2_values, "values for --param2");
  sweep->add_option("--range2", p2_range, "range for --param2");
  sweep->add_option("--algo", algos_text, "comma-separated algorithm subset");
  sweep->add_option("--order", order_text, "streaming item order");
  sweep->add_option("--alpha", alpha, "greedy commitment fraction");
  sweep->add_option("--format", format, "csv|json");
  sweep->add_option("--out", out_path, "output path or - for stdout");

  std::string n_text;
  double horizon = 1e6;
  double warmup = 0.0;
  std::uint64_t seed = 0;
  int replications = 1;
  std::string holding_text = "exponential";
  auto* simulate_cmd = app.add_subcommand("simulate", "Monte Carlo validation of a session vector");
  simulate_cmd->add_option("--config", config_path, "Instance config JSON")->required();
  simulate_cmd->add_option("--n", n_text, "comma-separated session counts per SP")->required();
  simulate_cmd->add_option("--horizon", horizon, "simulated seconds");
  simulate_cmd->add_option("--warmup", warmup, "seconds excluded from statistics");
  simulate_cmd->add_option("--seed", seed, "master seed");
  simulate_cmd->add_option("--replications", replications, "independent replications");
  simulate_cmd->add_option("--holding", holding_text, "exponential|deterministic");
  simulate_cmd->add_option("--out", out_path, "output path or - for stdout");

  std::int64_t scale = 4;
  auto* verify = app.add_subcommand(
      "verify", "Check the streaming bound against the exact oracle on a scaled replica");
  verify->add_option("--config", config_path, "Instance config JSON")->required();
  verify->add_option("--scale", scale, "capacity divisor for the replica");
  verify->add_option("--order", order_text, "streaming item order");
  verify->add_option("--out", out_path, "output path or - for stdout");

  double erlang_a = 0.0;
  std::int64_t erlang_n = 0;
  auto* erlang_cmd = app.add_subcommand("erlang", "Print the blocking probability B(n, a)");
  erlang_cmd->add_option("--a", erlang_a, "offered load in erlangs")->required();
  erlang_cmd->add_option("--n", erlang_n, "server count")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  }

  try {
    if (erlang_cmd->parsed()) {
      std::cout << edgeslicer::format_real(edgeslicer::erlang_b(erlang_a, erlang_n)) << '\n';
      return 0;
    }

    const Instance inst = load_instance(config_path);

    if (solve->parsed()) {
      const SolveResult result =
          run_solve(inst, parse_algo(algo_text), ItemOrder::parse(order_text), alpha);
      emit(out_path, solve_json(inst, result));
      return 0;
    }
    if (sweep->parsed()) {
      SweepSpec spec;
      spec.param1 = make_parameter(p1_path, p1_values, p1_range);
      if (!p2_path.empty()) {
        spec.param2 = make_parameter(p2_path, p2_values, p2_range);
      } else if (!p2_values.empty() || !p2_range.empty()) {
        throw std::invalid_argument("--values2/--range2 require --param2");
      }
      std::stringstream stream(algos_text);
      std::string token;
      while (std::getline(stream, token, ',')) {
        if (!token.empty()) spec.algos.push_back(parse_algo(token));
      }
      spec.order = ItemOrder::parse(order_text);
      spec.alpha = alpha;
      const std::vector<SweepRow> rows = run_sweep(inst, spec);
      if (format == "csv") {
        emit(out_path, sweep_csv(inst, rows));
      } else if (format == "json") {
        emit(out_path, sweep_json(inst, rows));
      } else {
        throw std::invalid_argument("unknown format '" + format + "' (expected csv or json)");
      }
      return 0;
    }
    if (simulate_cmd->parsed()) {
      SimConfig cfg;
      cfg.horizon = horizon;
      cfg.warmup = warmup;
      cfg.seed = seed;
      cfg.replications = replications;
      if (holding_text == "exponential") {
        cfg.holding = HoldingTime::Exponential;
      } else if (holding_text == "deterministic") {
        cfg.holding = HoldingTime::Deterministic;
      } else {
        throw std::invalid_argument("unknown holding '" + holding_text + "'");
      }
      const SessionVector n = parse_counts(n_text);
      const SimReport report = simulate(inst, n, cfg);
      emit(out_path, simulate_json(inst, n, cfg, report));
      return 0;
    }
    if (verify->parsed()) {
      const VerifyReport report = verify_bound(inst, scale, ItemOrder::parse(order_text));
      std::ostringstream text;
      text << "OPT      = " << format_real(report.opt) << "\n"
           << "f_stream = " << format_real(report.f_stream) << "\n"
           << "bound    = " << format_real(report.bound) << "\n"
           << (report.pass ? "PASS" : "FAIL") << "\n";
      emit(out_path, text.str());
      return report.pass ? 0 : 1;
    }
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 2;
  } catch (const InfeasibleError& e) {
    std::cerr << "infeasible: " << e.what() << '\n';
    return 3;
  } catch (const BudgetError& e) {
    std::cerr << "budget exhausted: " << e.what() << '\n';
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
