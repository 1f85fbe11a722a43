#include "edgeslicer/objective.hpp"

#include <stdexcept>
#include <string>

namespace edgeslicer {

namespace {

void check_bounds(const Instance& inst, const SessionVector& n) {
  if (n.size() != inst.sps.size()) {
    throw std::invalid_argument("session vector length must equal P");
  }
  for (std::size_t p = 0; p < n.size(); ++p) {
    if (n[p] < 0) {
      throw std::out_of_range("session count must be non-negative (SP " + std::to_string(p) + ")");
    }
    if (n[p] > full_pool_sessions(inst, p)) {
      throw std::out_of_range("session count exceeds N_p for SP " + std::to_string(p));
    }
  }
}

}  // namespace

ObjectiveValue eval_f(const Instance& inst, const SessionVector& n) {
  check_bounds(inst, n);
  const std::vector<double> w = weights(inst);
  ObjectiveValue out;
  out.per_sp.resize(n.size());
  for (std::size_t p = 0; p < n.size(); ++p) {
    out.per_sp[p] = w[p] * served_prob(inst.sps[p].offered_load(), n[p]);
    out.f += out.per_sp[p];
  }
  return out;
}

double marginal_gain(const Instance& inst, const SessionVector& n, std::size_t p) {
  check_bounds(inst, n);
  if (p >= n.size()) throw std::out_of_range("SP index out of range");
  if (n[p] >= full_pool_sessions(inst, p)) {
    throw std::invalid_argument("SP " + std::to_string(p) + " is saturated (n_p == N_p)");
  }
  const std::vector<double> w = weights(inst);
  ErlangRecurrence rec(inst.sps[p].offered_load());
  for (std::int64_t i = 0; i < n[p]; ++i) rec.add_server();
  return w[p] * (rec.blocking() - rec.blocking_with_one_more());
}

double expected_utility(const Instance& inst, const SessionVector& n) {
  return (inst.u_edge - inst.u_cloud) * eval_f(inst, n).f + inst.u_cloud;
}

GainEvaluator::GainEvaluator(const Instance& inst) : w_(weights(inst)) {
  const std::size_t pcount = inst.sps.size();
  singleton_.resize(pcount);
  state_.reserve(pcount);
  n_.assign(pcount, 0);
  for (std::size_t p = 0; p < pcount; ++p) {
    state_.emplace_back(inst.sps[p].offered_load());
    singleton_[p] = w_[p] * (1.0 - state_[p].blocking_with_one_more());
  }
}

double GainEvaluator::gain(std::size_t p) const {
  return w_[p] * (state_[p].blocking() - state_[p].blocking_with_one_more());
}

void GainEvaluator::commit(std::size_t p) {
  state_[p].add_server();
  ++n_[p];
}

double GainEvaluator::value() const {
  double f = 0.0;
  for (std::size_t p = 0; p < n_.size(); ++p) f += contribution(p);
  return f;
}

double GainEvaluator::contribution(std::size_t p) const {
  return w_[p] * (1.0 - state_[p].blocking());
}

void GainEvaluator::reset() {
  for (std::size_t p = 0; p < n_.size(); ++p) {
    state_[p] = ErlangRecurrence(state_[p].offered_load());
    n_[p] = 0;
  }
}

}  // namespace edgeslicer
