#pragma once

#include <cmath>
#include <stdexcept>

#include "gwex/distribution.hpp"
#include "gwex/special_functions.hpp"

namespace gwex {

// Density of the i-th order statistic of n iid draws from dist, assembled in
// log space so F^(i-1) (1-F)^(n-i) cannot underflow prematurely.
inline double order_stat_pdf_at(const Distribution& dist, int i, int n, double x) {
  if (n < 1 || i < 1 || i > n) throw std::invalid_argument("order_stat_pdf_at: need 1 <= i <= n");
  const double f = dist.pdf(x);
  if (f == 0.0) return 0.0;
  const double F = dist.cdf(x);
  double t = log_factorial(n) - log_factorial(i - 1) - log_factorial(n - i);
  if (i > 1) {
    if (F <= 0.0) return 0.0;
    t += (i - 1) * std::log(F);
  }
  if (n - i > 0) {
    if (F >= 1.0) return 0.0;
    t += (n - i) * std::log1p(-F);
  }
  return std::exp(t) * f;
}

inline double order_stat_cdf_at(const Distribution& dist, int i, int n, double x) {
  return order_stat_cdf_from_base(i, n, dist.cdf(x));
}

}  // namespace gwex
