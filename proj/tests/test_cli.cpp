#include <doctest.h>

#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "testutil.hpp"

namespace {

const std::string kBin = EDGE_SLICER_BIN;
const std::string kConfig = std::string(EDGE_SLICER_SOURCE_DIR) + "/configs/g4dn_two_sp.json";

struct RunResult {
  int exit_code = -1;
  std::string output;  // stdout only
};

RunResult run(const std::string& args) {
  const std::string command = kBin + " " + args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult result;
  std::array<char, 4096> buffer{};
  std::size_t got = 0;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
    result.output.append(buffer.data(), got);
  }
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::string write_temp_config(const std::string& name, const std::string& body) {
  const std::filesystem::path path = std::filesystem::temp_directory_path() / name;
  std::ofstream out(path);
  out << body;
  return path.string();
}

}  // namespace

TEST_CASE("erlang subcommand prints B with 12 significant digits") {
  const RunResult result = run("erlang --a 2 --n 2");
  CHECK(result.exit_code == 0);
  CHECK(result.output == "0.4\n");
  const RunResult zero = run("erlang --a 0.5 --n 1");
  CHECK(zero.output == "0.333333333333\n");
}

TEST_CASE("solve emits solution JSON for each algorithm") {
  for (const std::string algo : {"stream", "exact", "mdkp", "prop", "greedy"}) {
    const RunResult result = run("solve --config " + kConfig + " --algo " + algo);
    CAPTURE(algo);
    CHECK(result.exit_code == 0);
    CHECK(result.output.find("\"n\"") != std::string::npos);
    CHECK(result.output.find("\"f\"") != std::string::npos);
    CHECK(result.output.find("\"per_sp_blocking\"") != std::string::npos);
    CHECK(result.output.find("\"theta\"") != std::string::npos);
  }
  const RunResult stream = run("solve --config " + kConfig + " --algo stream --order seeded:7");
  CHECK(stream.output.find("\"threshold_used\"") != std::string::npos);
}

TEST_CASE("sweep emits CSV rows in grid order") {
  const RunResult result =
      run("sweep --config " + kConfig + " --param sps[0].lambda --values 10,20 --algo stream,prop");
  CHECK(result.exit_code == 0);
  // header + 2 points x 2 algorithms
  CHECK(std::count(result.output.begin(), result.output.end(), '\n') == 5);
  CHECK(result.output.rfind("param1,param2,algo,f,f_sp1,f_sp2,B_sp1,B_sp2,util_cpu,util_ram,n_sp1,n_sp2,wall_time_ms", 0) == 0);
  const RunResult json =
      run("sweep --config " + kConfig +
          " --param sps[0].lambda --values 20 --algo stream --format json");
  CHECK(json.exit_code == 0);
  CHECK(json.output.find("\"param1\"") != std::string::npos);
}

TEST_CASE("simulate reports per-replication detail") {
  const RunResult result = run("simulate --config " + kConfig +
                               " --n 76,4 --horizon 2000 --seed 42 --replications 2");
  CHECK(result.exit_code == 0);
  CHECK(result.output.find("\"replications_detail\"") != std::string::npos);
  CHECK(result.output.find("\"empirical_B\"") != std::string::npos);
}

TEST_CASE("verify passes on the scaled reference instance") {
  const RunResult result = run("verify --config " + kConfig + " --scale 4");
  CHECK(result.exit_code == 0);
  CHECK(result.output.find("PASS") != std::string::npos);
}

TEST_CASE("config errors exit 2") {
  const std::string bad = write_temp_config("edge_slicer_bad_epsilon.json", R"({
    "resources": [{"label": "cpu", "unit_scale": 1}],
    "capacities": [10],
    "sps": [{"name": "a", "lambda": 1.0, "mu": 1.0, "demand": [1]}],
    "epsilon": 0.9,
    "u_edge": 2.0,
    "u_cloud": 1.0
  })");
  const RunResult result = run("solve --config " + bad);
  CHECK(result.exit_code == 2);
  const RunResult missing = run("solve --config /nonexistent.json");
  CHECK(missing.exit_code == 2);
  const RunResult bad_flag = run("solve --config " + kConfig + " --algo quantum");
  CHECK(bad_flag.exit_code == 2);
}

TEST_CASE("infeasible session vectors exit 3") {
  const RunResult result =
      run("simulate --config " + kConfig + " --n 97,0 --horizon 100 --seed 1");
  CHECK(result.exit_code == 3);
}

TEST_CASE("sweep output to a file matches stdout") {
  const std::filesystem::path path =
      std::filesystem::temp_directory_path() / "edge_slicer_sweep_out.csv";
  const std::string args = "sweep --config " + kConfig +
                           " --param sps[0].lambda --values 20 --algo prop --out ";
  const RunResult to_stdout = run(args + "-");
  const RunResult to_file = run(args + path.string());
  CHECK(to_file.exit_code == 0);
  const std::string file_body = edgeslicer::testutil::read_file(path.string());
  // wall-time column differs run to run; compare with the tolerant diff
  const auto diff = edgeslicer::testutil::compare_sweep_csv(to_stdout.output, file_body, 1e-9);
  CAPTURE(diff.message);
  CHECK(diff.ok);
  std::filesystem::remove(path);
}
