#pragma once

#include <Eigen/Core>
#include <cmath>
#include <limits>

namespace becgap::numeric {

// log(sum_i exp(a_i)) without overflow; -inf for an empty argument list.
inline double log_sum_exp(const Eigen::Ref<const Eigen::ArrayXd>& args) {
  if (args.size() == 0) return -std::numeric_limits<double>::infinity();
  const double m = args.maxCoeff();
  if (!std::isfinite(m)) return m;
  return m + std::log((args - m).exp().sum());
}

// Streaming variant over a raw span [begin, begin + n).
inline double log_sum_exp(const double* begin, long n) {
  return log_sum_exp(Eigen::Map<const Eigen::ArrayXd>(begin, n));
}

}  // namespace becgap::numeric
