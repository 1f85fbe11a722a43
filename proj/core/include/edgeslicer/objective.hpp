#pragma once

#include <cstdint>
#include <vector>

#include "edgeslicer/erlang.hpp"
#include "edgeslicer/model.hpp"

namespace edgeslicer {

/// Session counts per SP. The set formulation (candidate items, subsets,
/// characteristic vectors) collapses to these counts because every session
/// of one SP consumes the same demand vector.
using SessionVector = std::vector<std::int64_t>;

struct ObjectiveValue {
  double f = 0.0;              // probability an arriving user is served at the edge
  std::vector<double> per_sp;  // w_p * served_prob(A_p, n_p), sums to f
};

/// f(n) = sum_p w_p * (1 - B(A_p, n_p)). Every n_p must lie in [0, N_p].
ObjectiveValue eval_f(const Instance& inst, const SessionVector& n);

/// Gain of granting one more session to SP p:
///   w_p * (served_prob(A_p, n_p + 1) - served_prob(A_p, n_p)) >= 0.
/// Throws when SP p is already saturated (n_p == N_p).
double marginal_gain(const Instance& inst, const SessionVector& n, std::size_t p);

/// (U_E - U_C) * f(n) + U_C. Affine in f, so the argmax never depends on
/// the particular U_E > U_C > 0 pair.
double expected_utility(const Instance& inst, const SessionVector& n);

/// Mutable evaluator holding one Erlang recurrence per SP so solver loops
/// can query and commit gains in O(1). One evaluator per solver run; never
/// shared across threads.
class GainEvaluator {
 public:
  explicit GainEvaluator(const Instance& inst);

  /// Gain of adding one more session to SP p at the current counts. O(1).
  double gain(std::size_t p) const;
  /// Applies one session to SP p.
  void commit(std::size_t p);
  /// Current f, summed in SP order. O(P).
  double value() const;
  /// w_p * served_prob(A_p, n_p) for the current count.
  double contribution(std::size_t p) const;
  /// f({one session of SP p}) from an empty set.
  double singleton_value(std::size_t p) const { return singleton_[p]; }

  const SessionVector& counts() const { return n_; }
  const std::vector<double>& sp_weights() const { return w_; }
  void reset();

 private:
  std::vector<double> w_;
  std::vector<double> singleton_;
  std::vector<ErlangRecurrence> state_;
  SessionVector n_;
};

}  // namespace edgeslicer
