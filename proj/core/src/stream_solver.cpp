#include "edgeslicer/stream_solver.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace edgeslicer {

ItemOrder ItemOrder::parse(const std::string& text) {
  if (text == "round-robin") return round_robin();
  if (text == "sequential") return sequential();
  const std::string prefix = "seeded:";
  if (text.rfind(prefix, 0) == 0) {
    return seeded(std::stoull(text.substr(prefix.size())));
  }
  throw std::invalid_argument("unknown item order '" + text +
                              "' (expected round-robin, sequential or seeded:<u64>)");
}

std::string ItemOrder::to_string() const {
  switch (kind) {
    case ItemOrderKind::RoundRobin: return "round-robin";
    case ItemOrderKind::Sequential: return "sequential";
    case ItemOrderKind::Seeded: return "seeded:" + std::to_string(seed);
  }
  return "round-robin";
}

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// Unbiased-enough bounded draw; portable unlike std::shuffle.
std::uint64_t next_below(std::uint64_t& state, std::uint64_t bound) {
  return splitmix64(state) % bound;
}

}  // namespace

std::vector<Item> item_stream(const Instance& inst, const ItemOrder& order) {
  const std::size_t pcount = inst.sps.size();
  std::vector<std::int64_t> cap(pcount);
  std::size_t total = 0;
  for (std::size_t p = 0; p < pcount; ++p) {
    cap[p] = full_pool_sessions(inst, p);
    total += static_cast<std::size_t>(cap[p]);
  }
  std::vector<Item> items;
  items.reserve(total);
  switch (order.kind) {
    case ItemOrderKind::RoundRobin: {
      for (std::int64_t i = 0; items.size() < total; ++i) {
        for (std::size_t p = 0; p < pcount; ++p) {
          if (i < cap[p]) items.push_back({p, i});
        }
      }
      break;
    }
    case ItemOrderKind::Sequential: {
      for (std::size_t p = 0; p < pcount; ++p) {
        for (std::int64_t i = 0; i < cap[p]; ++i) items.push_back({p, i});
      }
      break;
    }
    case ItemOrderKind::Seeded: {
      for (std::size_t p = 0; p < pcount; ++p) {
        for (std::int64_t i = 0; i < cap[p]; ++i) items.push_back({p, i});
      }
      std::uint64_t state = order.seed;
      for (std::size_t i = items.size(); i > 1; --i) {
        const std::size_t j = static_cast<std::size_t>(next_below(state, i));
        std::swap(items[i - 1], items[j]);
      }
      // Re-number items within each SP so indexes stay 0-based in order of
      // appearance; the solver only cares about the SP of each item.
      std::vector<std::int64_t> seen(pcount, 0);
      for (Item& item : items) item.index = seen[item.sp]++;
      break;
    }
  }
  return items;
}

namespace {

// One maintained threshold level: a candidate solution grown greedily by
// the density test at this level.
struct Level {
  double v = 0.0;
  GainEvaluator eval;
  std::vector<std::int64_t> usage;  // base units consumed per resource
  bool frozen = false;              // a big singleton was installed

  Level(double threshold, const Instance& inst)
      : v(threshold), eval(inst), usage(inst.dims(), 0) {}
};

}  // namespace

StreamSolution solve_stream(const Instance& inst, const ItemOrder& order) {
  inst.validate();
  const std::size_t pcount = inst.sps.size();
  const int d = inst.dims();
  const double guard = 1.0 + 2.0 * d;        // 1 + 2d
  const double base = 1.0 + guard * inst.epsilon;
  const double log_base = std::log(base);
  const std::vector<std::int64_t>& cap = inst.pool.capacities;
  const std::int64_t cap_max = *std::max_element(cap.begin(), cap.end());

  // Per-SP constants of the item stream: all items of one SP are identical.
  GainEvaluator probe(inst);
  std::vector<double> singleton(pcount);        // f({j}) for an item of SP p
  std::vector<double> density_for_m(pcount);    // max over dims of f({j}) / z_p^r
  std::vector<double> norm_cost_max(pcount);    // max over dims of z_p^r / K^r
  std::vector<bool> big(pcount, false);         // consumes >= half of some budget
  for (std::size_t p = 0; p < pcount; ++p) {
    singleton[p] = probe.singleton_value(p);
    double dens = 0.0;
    double cmax = 0.0;
    for (int r = 0; r < d; ++r) {
      const double z = static_cast<double>(inst.sps[p].demand[r]);
      dens = std::max(dens, singleton[p] / z);
      cmax = std::max(cmax, z / static_cast<double>(cap[r]));
      if (2 * inst.sps[p].demand[r] >= cap[r]) big[p] = true;
    }
    density_for_m[p] = dens;
    norm_cost_max[p] = cmax;
  }

  std::map<long, Level> levels;  // keyed by grid exponent l, v = base^l
  double m = 0.0;

  const auto refresh_window = [&]() {
    // Keep levels with m/base <= base^l <= 2 * K_max * m. Levels below the
    // window are discarded with their partial solutions; new ones start
    // empty and see only the remainder of the stream.
    const long lo = static_cast<long>(std::ceil(std::log(m) / log_base - 1.0 - 1e-9));
    const long hi = static_cast<long>(
        std::floor(std::log(2.0 * static_cast<double>(cap_max) * m) / log_base + 1e-9));
    for (auto it = levels.begin(); it != levels.end();) {
      it = it->first < lo ? levels.erase(it) : std::next(it);
    }
    for (long l = lo; l <= hi; ++l) {
      if (!levels.count(l)) levels.emplace(l, Level(std::pow(base, static_cast<double>(l)), inst));
    }
  };

  const std::vector<Item> items = item_stream(inst, order);
  for (const Item& item : items) {
    const std::size_t p = item.sp;
    if (density_for_m[p] > m) {
      m = density_for_m[p];
      refresh_window();
    }
    for (auto& [l, level] : levels) {
      if (level.frozen) continue;
      const double threshold = (2.0 * level.v / guard) * norm_cost_max[p];
      if (big[p] && singleton[p] >= threshold) {
        // A half-budget item dense enough for this level replaces the
        // candidate outright and ends the scan at this level.
        level.eval.reset();
        level.eval.commit(p);
        std::fill(level.usage.begin(), level.usage.end(), 0);
        for (int r = 0; r < d; ++r) level.usage[r] = inst.sps[p].demand[r];
        level.frozen = true;
        continue;
      }
      bool would_fit = true;
      for (int r = 0; r < d; ++r) {
        if (level.usage[r] + inst.sps[p].demand[r] > cap[r]) {
          would_fit = false;
          break;
        }
      }
      if (would_fit && level.eval.gain(p) >= threshold) {
        level.eval.commit(p);
        for (int r = 0; r < d; ++r) level.usage[r] += inst.sps[p].demand[r];
      }
    }
  }

  StreamSolution out;
  out.items_scanned = static_cast<std::int64_t>(items.size());
  out.grid.base = base;
  out.n.assign(pcount, 0);
  out.f.per_sp.assign(pcount, 0.0);

  const Level* winner = nullptr;
  for (const auto& [l, level] : levels) {
    out.grid.levels.push_back(level.v);
    out.grid.values.push_back(level.eval.value());
  }
  std::size_t idx = 0;
  for (const auto& [l, level] : levels) {
    // argmax over levels; ties go to the smaller threshold (map is ascending,
    // so strict improvement keeps the first of any tie).
    if (winner == nullptr || out.grid.values[idx] > out.f.f) {
      winner = &level;
      out.f.f = out.grid.values[idx];
      out.threshold_used = level.v;
    }
    ++idx;
  }
  if (winner != nullptr) {
    out.n = winner->eval.counts();
    out.f.f = 0.0;
    for (std::size_t p = 0; p < pcount; ++p) {
      out.f.per_sp[p] = winner->eval.contribution(p);
      out.f.f += out.f.per_sp[p];
    }
  }
  return out;
}

}  // namespace edgeslicer
