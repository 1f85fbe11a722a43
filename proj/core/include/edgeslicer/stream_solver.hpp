#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "edgeslicer/model.hpp"
#include "edgeslicer/objective.hpp"

namespace edgeslicer {

enum class ItemOrderKind { RoundRobin, Sequential, Seeded };

/// Order in which candidate sessions are streamed into the solver.
struct ItemOrder {
  ItemOrderKind kind = ItemOrderKind::RoundRobin;
  std::uint64_t seed = 0;

  static ItemOrder round_robin() { return {ItemOrderKind::RoundRobin, 0}; }
  static ItemOrder sequential() { return {ItemOrderKind::Sequential, 0}; }
  static ItemOrder seeded(std::uint64_t s) { return {ItemOrderKind::Seeded, s}; }

  /// Accepts "round-robin", "sequential" or "seeded:<u64>".
  static ItemOrder parse(const std::string& text);
  std::string to_string() const;
};

/// One candidate session: `index` is its 0-based position within the SP's
/// candidate set of size N_p.
struct Item {
  std::size_t sp = 0;
  std::int64_t index = 0;
};

/// Emits every candidate session of every SP exactly once.
/// RoundRobin interleaves SPs by ascending index, one item each per cycle;
/// Sequential exhausts SP 0 first; Seeded is a deterministic permutation.
std::vector<Item> item_stream(const Instance& inst, const ItemOrder& order);

/// Final state of the geometric threshold grid: thresholds are powers of
/// base = 1 + (1+2d)*epsilon, windowed by the running max singleton density.
/// `values` holds f of the candidate solution kept at each level.
struct ThresholdGrid {
  double base = 0.0;
  std::vector<double> levels;
  std::vector<double> values;
};

struct StreamSolution {
  SessionVector n;
  ObjectiveValue f;
  double threshold_used = 0.0;  // level whose candidate won the final argmax
  std::int64_t items_scanned = 0;
  ThresholdGrid grid;
};

/// Single-pass streaming maximization of f under the d resource constraints.
/// Guarantees f >= (1/(1+2d) - epsilon) * OPT. Deterministic for a fixed
/// instance and order.
StreamSolution solve_stream(const Instance& inst, const ItemOrder& order = {});

}  // namespace edgeslicer
