#include "edgeslicer/erlang.hpp"

#include <cmath>
#include <stdexcept>

namespace edgeslicer {

namespace {

void check_args(double a, std::int64_t n) {
  if (!std::isfinite(a) || a < 0.0) {
    throw std::invalid_argument("offered load must be a finite non-negative real");
  }
  if (n < 0) {
    throw std::invalid_argument("server count must be non-negative");
  }
}

}  // namespace

double erlang_b(double a, std::int64_t n) {
  check_args(a, n);
  double b = 1.0;
  for (std::int64_t i = 1; i <= n; ++i) {
    b = a * b / (static_cast<double>(i) + a * b);
  }
  return b;
}

double erlang_b_direct(double a, std::int64_t n) {
  check_args(a, n);
  if (a == 0.0) {
    return n == 0 ? 1.0 : 0.0;
  }
  // Terms t_i = a^i / i! in log space; B = t_n / sum_i t_i.
  const double log_a = std::log(a);
  double max_log = 0.0;  // t_0 = 1
  for (std::int64_t i = 1; i <= n; ++i) {
    const double li = static_cast<double>(i) * log_a - std::lgamma(static_cast<double>(i) + 1.0);
    if (li > max_log) max_log = li;
  }
  double sum = 0.0;
  double log_tn = 0.0;
  for (std::int64_t i = 0; i <= n; ++i) {
    const double li = static_cast<double>(i) * log_a - std::lgamma(static_cast<double>(i) + 1.0);
    sum += std::exp(li - max_log);
    if (i == n) log_tn = li;
  }
  return std::exp(log_tn - max_log - std::log(sum));
}

double served_prob(double a, std::int64_t n) { return 1.0 - erlang_b(a, n); }

ErlangRecurrence::ErlangRecurrence(double a) : a_(a) { check_args(a, 0); }

double ErlangRecurrence::blocking_with_one_more() const {
  return a_ * b_ / (static_cast<double>(n_ + 1) + a_ * b_);
}

void ErlangRecurrence::add_server() {
  b_ = blocking_with_one_more();
  ++n_;
}

}  // namespace edgeslicer
