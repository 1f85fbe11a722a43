#pragma once

#include <cstdint>

namespace edgeslicer {

/// Blocking probability of an n-server loss system at offered load `a`
/// erlangs, computed with the stable recurrence
///   B(0) = 1,  B(i) = a*B(i-1) / (i + a*B(i-1)).
/// Rejects negative or non-finite `a`.
double erlang_b(double a, std::int64_t n);

/// Literal normalized-term summation of the same formula, evaluated in log
/// space so the whole n range works without factorial overflow. Slower than
/// the recurrence; kept as an independent cross-check.
double erlang_b_direct(double a, std::int64_t n);

/// 1 - erlang_b(a, n): probability an arriving session finds a free server.
double served_prob(double a, std::int64_t n);

/// Recurrence state that adds servers one at a time, each step O(1).
class ErlangRecurrence {
 public:
  explicit ErlangRecurrence(double a);

  double offered_load() const { return a_; }
  std::int64_t servers() const { return n_; }
  double blocking() const { return b_; }
  double blocking_with_one_more() const;
  void add_server();

 private:
  double a_;
  double b_ = 1.0;
  std::int64_t n_ = 0;
};

}  // namespace edgeslicer
