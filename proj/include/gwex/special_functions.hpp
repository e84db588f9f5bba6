#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>

namespace gwex {

inline double log_factorial(int k) {
  if (k < 0) throw std::invalid_argument("log_factorial: negative argument");
  return std::lgamma(static_cast<double>(k) + 1.0);
}

inline double log_binomial(int n, int k) {
  if (k < 0 || k > n) throw std::invalid_argument("log_binomial: k outside [0, n]");
  return log_factorial(n) - log_factorial(k) - log_factorial(n - k);
}

inline double log_beta(double a, double b) {
  return std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b);
}

// Beta(a, b) density, assembled in log space so large shape parameters do not
// overflow the u^(a-1) (1-u)^(b-1) factors. Endpoint values are the limits.
inline double beta_pdf(double a, double b, double u) {
  if (!(a > 0.0) || !(b > 0.0))
    throw std::invalid_argument("beta_pdf: shape parameters must be positive");
  if (u < 0.0 || u > 1.0) return 0.0;
  const double log_norm = -log_beta(a, b);
  if (u == 0.0 || u == 1.0) {
    const double exponent = (u == 0.0) ? a - 1.0 : b - 1.0;
    if (exponent > 0.0) return 0.0;
    if (exponent == 0.0) return std::exp(log_norm + ((u == 0.0) ? (b - 1.0) * std::log1p(-u) : (a - 1.0) * std::log(u)));
    return std::numeric_limits<double>::infinity();
  }
  return std::exp(log_norm + (a - 1.0) * std::log(u) + (b - 1.0) * std::log1p(-u));
}

// Density of the (2i-1)-th order statistic of 2n-1 iid uniforms, i.e. Beta(2i-1, 2n-2i+1).
// These are the only uniform order statistics the extreme-ranked formulas need.
inline double beta_phi_at(int i, int n, double u) {
  if (n < 1 || i < 1 || i > n) throw std::invalid_argument("beta_phi_at: need 1 <= i <= n");
  return beta_pdf(2.0 * i - 1.0, 2.0 * (n - i) + 1.0, u);
}

// Density of the (2i-1)-th order statistic of 2n iid standard exponentials.
inline double exp_order_stat_pdf_at(int i, int n, double x) {
  if (n < 1 || i < 1 || i > n) throw std::invalid_argument("exp_order_stat_pdf_at: need 1 <= i <= n");
  if (x < 0.0) return 0.0;
  const int a = 2 * i - 2;      // power of 1 - e^-x
  const int b = 2 * (n - i) + 2;  // power of e^-x
  const double log_norm = log_factorial(2 * n) - log_factorial(a) - log_factorial(2 * (n - i) + 1);
  double t = -static_cast<double>(b) * x;
  if (a > 0) {
    if (x == 0.0) return 0.0;
    t += a * std::log(-std::expm1(-x));
  }
  return std::exp(log_norm + t);
}

// P(at least i of n iid events with marginal probability p), the cdf of an
// order statistic expressed through the base cdf value p. Plain binomial sum;
// fine for the small n used here.
inline double order_stat_cdf_from_base(int i, int n, double p) {
  if (n < 1 || i < 1 || i > n) throw std::invalid_argument("order_stat_cdf_from_base: need 1 <= i <= n");
  if (p <= 0.0) return 0.0;
  if (p >= 1.0) return 1.0;
  double s = 0.0;
  for (int k = i; k <= n; ++k)
    s += std::exp(log_binomial(n, k) + k * std::log(p) + (n - k) * std::log1p(-p));
  return std::min(s, 1.0);
}

}  // namespace gwex
