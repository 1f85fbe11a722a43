#include <benchmark/benchmark.h>

#include "edgeslicer/erlang.hpp"
#include "edgeslicer/exact_solver.hpp"
#include "edgeslicer/simulate.hpp"
#include "edgeslicer/stream_solver.hpp"

namespace {

using namespace edgeslicer;

Instance reference_instance() {
  Instance inst;
  inst.kinds = {{0, "cpu", 1000}, {1, "ram", 1024}};
  inst.pool.capacities = {96000, 393216};
  inst.sps = {
      {"sp1", 20.0, 1.0, {1000, 2048}},
      {"sp2", 5.0, 10.0, {4000, 512}},
  };
  inst.epsilon = 0.01;
  return inst;
}

void BM_ErlangRecurrence(benchmark::State& state) {
  const auto servers = static_cast<std::int64_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(erlang_b(20.0, servers));
  }
}
BENCHMARK(BM_ErlangRecurrence)->Arg(24)->Arg(96)->Arg(500);

void BM_SolveStream(benchmark::State& state) {
  const Instance inst = reference_instance();
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_stream(inst));
  }
}
BENCHMARK(BM_SolveStream);

void BM_SolveExact(benchmark::State& state) {
  const Instance inst = reference_instance();
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_exact_erlang(inst));
  }
}
BENCHMARK(BM_SolveExact);

void BM_MdkpDp(benchmark::State& state) {
  Instance inst;
  inst.kinds = {{0, "r0", 1}, {1, "r1", 1}};
  inst.pool.capacities = {state.range(0), state.range(0)};
  inst.sps = {
      {"a", 2.0, 1.0, {1, 2}},
      {"b", 1.0, 1.0, {3, 1}},
  };
  inst.epsilon = 0.05;
  for (auto _ : state) {
    benchmark::DoNotOptimize(solve_mdkp_linear(inst));
  }
}
BENCHMARK(BM_MdkpDp)->Arg(64)->Arg(256);

void BM_Simulate(benchmark::State& state) {
  Instance inst;
  inst.kinds = {{0, "slots", 1}};
  inst.pool.capacities = {2};
  inst.sps = {{"a", 2.0, 1.0, {1}}};
  inst.epsilon = 0.05;
  SimConfig cfg;
  cfg.horizon = static_cast<double>(state.range(0));
  cfg.seed = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(simulate(inst, {2}, cfg));
  }
}
BENCHMARK(BM_Simulate)->Arg(10'000)->Arg(100'000);

}  // namespace

BENCHMARK_MAIN();
