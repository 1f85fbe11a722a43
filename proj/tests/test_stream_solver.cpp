#include <doctest.h>

#include <algorithm>

#include "edgeslicer/exact_solver.hpp"
#include "edgeslicer/stream_solver.hpp"
#include "testutil.hpp"

using namespace edgeslicer;

namespace {

Instance two_by_three() {
  Instance inst;
  inst.kinds = {{0, "slots", 1}};
  inst.pool.capacities = {3};
  inst.sps = {{"a", 1.0, 1.0, {1}}, {"b", 1.0, 1.0, {1}}};
  inst.epsilon = 0.05;
  inst.validate();
  return inst;
}

}  // namespace

TEST_CASE("item order parsing round-trips") {
  CHECK(ItemOrder::parse("round-robin").kind == ItemOrderKind::RoundRobin);
  CHECK(ItemOrder::parse("sequential").kind == ItemOrderKind::Sequential);
  const ItemOrder seeded = ItemOrder::parse("seeded:42");
  CHECK(seeded.kind == ItemOrderKind::Seeded);
  CHECK(seeded.seed == 42);
  CHECK(seeded.to_string() == "seeded:42");
  CHECK_THROWS_AS(ItemOrder::parse("shuffled"), std::invalid_argument);
}

TEST_CASE("item stream: pinned orders") {
  Instance inst = two_by_three();
  inst.pool.capacities = {2};  // N = (2, 2)
  const std::vector<Item> rr = item_stream(inst, ItemOrder::round_robin());
  REQUIRE(rr.size() == 4);
  CHECK(rr[0].sp == 0);
  CHECK(rr[1].sp == 1);
  CHECK(rr[2].sp == 0);
  CHECK(rr[3].sp == 1);

  Instance uneven = two_by_three();
  uneven.pool.capacities = {2};
  uneven.sps[1].demand = {2};  // N = (2, 1)
  const std::vector<Item> seq = item_stream(uneven, ItemOrder::sequential());
  REQUIRE(seq.size() == 3);
  CHECK(seq[0].sp == 0);
  CHECK(seq[1].sp == 0);
  CHECK(seq[2].sp == 1);

  const std::vector<Item> s1 = item_stream(inst, ItemOrder::seeded(42));
  const std::vector<Item> s2 = item_stream(inst, ItemOrder::seeded(42));
  REQUIRE(s1.size() == s2.size());
  for (std::size_t i = 0; i < s1.size(); ++i) {
    CHECK(s1[i].sp == s2[i].sp);
    CHECK(s1[i].index == s2[i].index);
  }
  // every candidate appears exactly once
  std::vector<int> seen(2, 0);
  for (const Item& item : s1) ++seen[item.sp];
  CHECK(seen == std::vector<int>{2, 2});
}

TEST_CASE("streaming solver meets the bound on the pinned small instance") {
  const Instance inst = two_by_three();
  // Exhaustive oracle: OPT = 0.65 at (1,2)/(2,1).
  const testutil::BestPoint opt = testutil::enumerate_best_f(inst);
  REQUIRE(opt.value == doctest::Approx(0.65).epsilon(1e-12));
  const double bound = (1.0 / 3.0 - inst.epsilon) * opt.value;
  for (const ItemOrder& order :
       {ItemOrder::round_robin(), ItemOrder::sequential(), ItemOrder::seeded(7)}) {
    const StreamSolution sol = solve_stream(inst, order);
    CHECK(fits(inst, sol.n));
    CHECK(sol.f.f >= bound);
  }
}

TEST_CASE("single tenant whose session fills the node becomes a big singleton") {
  Instance inst;
  inst.kinds = {{0, "cpu", 1}, {1, "ram", 1}};
  inst.pool.capacities = {10, 6};
  inst.sps = {{"a", 2.0, 1.0, {10, 6}}};
  inst.epsilon = 0.01;
  const StreamSolution sol = solve_stream(inst);
  CHECK(sol.n == SessionVector{1});
  CHECK(sol.f.f == doctest::Approx(served_prob(2.0, 1)).epsilon(1e-12));
}

TEST_CASE("streaming solver is deterministic per order") {
  const Instance inst = testutil::g4dn_instance();
  for (const ItemOrder& order :
       {ItemOrder::round_robin(), ItemOrder::sequential(), ItemOrder::seeded(99)}) {
    const StreamSolution a = solve_stream(inst, order);
    const StreamSolution b = solve_stream(inst, order);
    CHECK(a.n == b.n);
    CHECK(a.f.f == b.f.f);
    CHECK(a.threshold_used == b.threshold_used);
    CHECK(a.items_scanned == b.items_scanned);
  }
}

TEST_CASE("solution value is consistent with eval_f and the level table") {
  const Instance inst = testutil::g4dn_instance();
  const StreamSolution sol = solve_stream(inst);
  CHECK(sol.f.f == doctest::Approx(eval_f(inst, sol.n).f).epsilon(1e-12));
  REQUIRE_FALSE(sol.grid.levels.empty());
  REQUIRE(sol.grid.levels.size() == sol.grid.values.size());
  const double best = *std::max_element(sol.grid.values.begin(), sol.grid.values.end());
  CHECK(sol.f.f == best);
  // threshold_used is the smallest level attaining the max
  for (std::size_t i = 0; i < sol.grid.levels.size(); ++i) {
    if (sol.grid.values[i] == best) {
      CHECK(sol.threshold_used == sol.grid.levels[i]);
      break;
    }
  }
  // grid levels ascend and are powers of the documented base
  for (std::size_t i = 1; i < sol.grid.levels.size(); ++i) {
    CHECK(sol.grid.levels[i] > sol.grid.levels[i - 1]);
  }
}

TEST_CASE("every intermediate solution respects capacity (final check proxy)") {
  testutil::Rng rng(1009);
  for (int round = 0; round < 60; ++round) {
    const Instance inst = testutil::random_instance(rng, 3, 2, 20, 4);
    for (const ItemOrder& order :
         {ItemOrder::round_robin(), ItemOrder::sequential(), ItemOrder::seeded(rng.next())}) {
      const StreamSolution sol = solve_stream(inst, order);
      CHECK(fits(inst, sol.n));
      CHECK(sol.f.f == doctest::Approx(eval_f(inst, sol.n).f).epsilon(1e-12));
    }
  }
}

TEST_CASE("approximation bound holds against the exhaustive oracle") {
  testutil::Rng rng(1103);
  int checked = 0;
  for (int round = 0; round < 40; ++round) {
    const Instance inst = testutil::random_instance(rng, 3, 2, 20, 4);
    const testutil::BestPoint opt = testutil::enumerate_best_f(inst);
    const double bound =
        (1.0 / (1.0 + 2.0 * inst.dims()) - inst.epsilon) * opt.value;
    for (const ItemOrder& order :
         {ItemOrder::round_robin(), ItemOrder::sequential(), ItemOrder::seeded(round)}) {
      const StreamSolution sol = solve_stream(inst, order);
      CAPTURE(round);
      REQUIRE(sol.f.f >= bound - 1e-12);
      ++checked;
    }
  }
  CHECK(checked == 120);
}
