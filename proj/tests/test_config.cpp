#include <doctest.h>

#include <string>

#include "edgeslicer/config.hpp"
#include "testutil.hpp"

using namespace edgeslicer;

namespace {

std::string reference_json() {
  return R"({
    "resources": [
      {"label": "cpu", "unit_scale": 1000},
      {"label": "ram", "unit_scale": 1024}
    ],
    "capacities": [96, 384],
    "sps": [
      {"name": "sp1", "lambda": 20.0, "mu": 1.0, "demand": [1, 2]},
      {"name": "sp2", "lambda": 5.0, "mu": 10.0, "demand": [4, 0.5]}
    ],
    "epsilon": 0.01,
    "u_edge": 2.0,
    "u_cloud": 1.0
  })";
}

std::string path_of(const std::string& json) {
  try {
    parse_instance(json);
  } catch (const ConfigError& e) {
    return e.path();
  }
  return "<no error>";
}

}  // namespace

TEST_CASE("reference config loads with base-unit conversion") {
  const Instance inst = parse_instance(reference_json());
  CHECK(inst.dims() == 2);
  CHECK(inst.pool.capacities == std::vector<std::int64_t>{96000, 393216});
  CHECK(inst.sps[0].demand == std::vector<std::int64_t>{1000, 2048});
  CHECK(inst.sps[1].demand == std::vector<std::int64_t>{4000, 512});
  CHECK(inst.sps[1].offered_load() == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(full_pool_sessions(inst, 0) == 96);
  CHECK(full_pool_sessions(inst, 1) == 24);
}

TEST_CASE("config matches the in-code reference instance") {
  const Instance file = parse_instance(reference_json());
  const Instance code = testutil::g4dn_instance();
  CHECK(file.pool.capacities == code.pool.capacities);
  CHECK(file.sps[0].demand == code.sps[0].demand);
  CHECK(file.sps[1].demand == code.sps[1].demand);
  CHECK(file.epsilon == code.epsilon);
}

TEST_CASE("round trip through instance_to_json") {
  const Instance inst = parse_instance(reference_json());
  const Instance back = parse_instance(instance_to_json(inst));
  CHECK(back.pool.capacities == inst.pool.capacities);
  CHECK(back.sps[0].demand == inst.sps[0].demand);
  CHECK(back.sps[1].demand == inst.sps[1].demand);
  CHECK(back.sps[1].lambda == inst.sps[1].lambda);
}

TEST_CASE("rejections carry the offending field path") {
  std::string bad = reference_json();

  SUBCASE("non-integral base units") {
    const auto pos = bad.find("[4, 0.5]");
    bad.replace(pos, 8, "[4, 0.50003]");
    CHECK(path_of(bad) == "sps[1].demand[1]");
  }
  SUBCASE("epsilon out of range") {
    const auto pos = bad.find("0.01");
    bad.replace(pos, 4, "0.21");
    CHECK(path_of(bad) == "epsilon");  // cap is 1/5 for d = 2
  }
  SUBCASE("zero capacity dimension") {
    const auto pos = bad.find("[96, 384]");
    bad.replace(pos, 9, "[96, 0]");
    CHECK(path_of(bad) == "capacities[1]");
  }
  SUBCASE("non-integral capacity in base units") {
    const auto pos = bad.find("[96, 384]");
    bad.replace(pos, 9, "[96.0001, 384]");
    CHECK(path_of(bad) == "capacities[0]");
  }
  SUBCASE("demand above capacity") {
    const auto pos = bad.find("[4, 0.5]");
    bad.replace(pos, 8, "[97, 0.5]");
    CHECK(path_of(bad) == "sps[1].demand[0]");
  }
  SUBCASE("negative arrival rate") {
    const auto pos = bad.find("\"lambda\": 20.0");
    bad.replace(pos, 14, "\"lambda\": -1.0");
    CHECK(path_of(bad) == "sps[0].lambda");
  }
  SUBCASE("missing field") {
    const auto pos = bad.find("\"epsilon\": 0.01,");
    bad.replace(pos, 16, "");
    CHECK(path_of(bad) == "epsilon");
  }
  SUBCASE("utilities out of order") {
    const auto pos = bad.find("\"u_cloud\": 1.0");
    bad.replace(pos, 14, "\"u_cloud\": 9.0");
    CHECK(path_of(bad) == "u_edge");
  }
}

TEST_CASE("malformed JSON is a config error, not a crash") {
  CHECK_THROWS_AS(parse_instance("{"), ConfigError);
  CHECK_THROWS_AS(parse_instance("[1,2,3]"), ConfigError);
  CHECK_THROWS_AS(load_instance("/nonexistent/config.json"), ConfigError);
}
