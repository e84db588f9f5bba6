#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "gwex/extropy.hpp"
#include "gwex/quadrature.hpp"

namespace gwex {

namespace detail {

inline constexpr double ln2 = std::numbers::ln2;

inline void require_positive(double v, const char* what) {
  if (!(v > 0.0) || !std::isfinite(v))
    throw std::domain_error(std::string(what) + " must be positive and finite");
}

// closed forms accumulate a handful of lgamma terms; their rounding noise is
// well under this blanket relative error
inline double closed_form_rounding(double value) {
  return 64.0 * std::numeric_limits<double>::epsilon() * std::abs(value);
}

}  // namespace detail

// Weighted extropy of the extreme-ranked design for the power family
// f(x) = theta x^(theta-1) on (0,1) with weight x^m, assembled in log space
// from gamma-function ratios. Requires m + 2 theta - 1 > 0.
inline GweResult closed_form_power(double theta, double m, int n) {
  detail::require_positive(theta, "closed_form_power: theta");
  detail::require_positive(m, "closed_form_power: m");
  if (n < 1) throw std::invalid_argument("closed_form_power: n must be >= 1");
  if (!(m + 2.0 * theta - 1.0 > 0.0))
    throw std::domain_error("closed_form_power: infeasible parameters, need m + 2*theta - 1 > 0");

  const double a = (2.0 * theta + m - 1.0) / theta;
  const double b = ((2.0 * n + 1.0) * theta + m - 1.0) / theta;
  const QConstants q = q_constants(n);
  double lg;
  if (n % 2 == 0) {
    lg = std::log(-q.q1) - detail::ln2 + 1.5 * n * std::log(theta) +
         0.5 * n * (std::log(2.0 * n - 1.0) - std::log(2.0 * n * theta + m - 1.0)) +
         0.5 * n * (log_factorial(2 * n - 1) + std::lgamma(a) - std::lgamma(b));
  } else {
    const double c3 = ((n + 1.0) * theta + m - 1.0) / theta;
    const int h = (n - 1) / 2;
    lg = std::log(-q.q2) - detail::ln2 + 0.5 * (3.0 * n - 1.0) * std::log(theta) +
         h * (std::log(2.0 * n - 1.0) - std::log(2.0 * n * theta + m - 1.0)) +
         h * (log_factorial(2 * n - 1) + std::lgamma(a) - std::lgamma(b)) + log_factorial(2 * n - 1) -
         log_factorial(n - 1) + std::lgamma(c3) - std::lgamma(b);
  }
  const double value = -std::exp(lg);
  return {value, Scheme::erss, n, Method::closed_form, detail::closed_form_rounding(value)};
}

// Exponential family with rate lambda and weight x^m: the scale enters only
// through lambda^(-n(m-1)); the shape is carried by moments of order statistics
// of 2n standard exponentials.
inline GweResult closed_form_exponential(double lambda, double m, int n, const QuadratureOptions& opts = {}) {
  detail::require_positive(lambda, "closed_form_exponential: lambda");
  detail::require_positive(m, "closed_form_exponential: m");
  if (n < 1) throw std::invalid_argument("closed_form_exponential: n must be >= 1");

  const QConstants q = q_constants(n);
  const IntegralResult lo = order_stat_moment(1, n, m, opts);
  const IntegralResult hi = order_stat_moment(n, n, m, opts);
  double lg = -n * (m - 1.0) * std::log(lambda) - (n + 1.0) * detail::ln2;
  double rel_err = 0.0;
  if (n % 2 == 0) {
    lg += std::log(-q.q1) + 0.5 * n * std::log(2.0 * n - 1.0) - n * std::log(static_cast<double>(n));
    lg += 0.5 * n * (std::log(lo.value) + std::log(hi.value));
    rel_err += 0.5 * n * (lo.abs_error_estimate / lo.value + hi.abs_error_estimate / hi.value);
  } else {
    const IntegralResult med = order_stat_moment((n + 1) / 2, n, m, opts);
    const int h = (n - 1) / 2;
    lg += std::log(-q.q2) + h * std::log(2.0 * n - 1.0) - (n - 1.0) * std::log(static_cast<double>(n));
    lg += h * (std::log(lo.value) + std::log(hi.value)) + std::log(med.value);
    rel_err += h * (lo.abs_error_estimate / lo.value + hi.abs_error_estimate / hi.value) +
               med.abs_error_estimate / med.value;
  }
  const double value = -std::exp(lg);
  return {value, Scheme::erss, n, Method::closed_form,
          std::abs(value) * rel_err + detail::closed_form_rounding(value)};
}

// Pareto family f(x) = alpha x^(-alpha-1) on (1, inf) with weight x^m.
// Requires 2 alpha - m + 1 > 0, the tail condition for the weighted integral.
inline GweResult closed_form_pareto(double alpha, double m, int n) {
  detail::require_positive(alpha, "closed_form_pareto: alpha");
  detail::require_positive(m, "closed_form_pareto: m");
  if (n < 1) throw std::invalid_argument("closed_form_pareto: n must be >= 1");
  if (!(2.0 * alpha - m + 1.0 > 0.0))
    throw std::domain_error("closed_form_pareto: infeasible parameters, need 2*alpha - m + 1 > 0");

  const double c1 = (2.0 * alpha - m + 1.0) / alpha;
  const double c2 = ((2.0 * n + 1.0) * alpha - m + 1.0) / alpha;
  const QConstants q = q_constants(n);
  double lg;
  if (n % 2 == 0) {
    lg = std::log(-q.q1) - detail::ln2 + 1.5 * n * std::log(alpha) +
         0.5 * n * (std::log(2.0 * n - 1.0) - std::log(2.0 * n * alpha - m + 1.0)) +
         0.5 * n * (log_factorial(2 * n - 1) + std::lgamma(c1) - std::lgamma(c2));
  } else {
    const double c3 = ((n + 1.0) * alpha - m + 1.0) / alpha;
    const int h = (n - 1) / 2;
    lg = std::log(-q.q2) - detail::ln2 + 0.5 * (3.0 * n - 1.0) * std::log(alpha) +
         h * (std::log(2.0 * n - 1.0) - std::log(2.0 * n * alpha - m + 1.0)) +
         h * (log_factorial(2 * n - 1) + std::lgamma(c1) - std::lgamma(c2)) + log_factorial(2 * n - 1) -
         log_factorial(n - 1) + std::lgamma(c3) - std::lgamma(c2);
  }
  const double value = -std::exp(lg);
  return {value, Scheme::erss, n, Method::closed_form, detail::closed_form_rounding(value)};
}

// Dispatch by family for the three families that have a closed form.
inline GweResult closed_form_erss(const Distribution& dist, const Weight& w, int n,
                                  const QuadratureOptions& opts = {}) {
  const bool power_like = w.kind() == WeightKind::power_weight || w.kind() == WeightKind::identity;
  if (!power_like)
    throw std::invalid_argument("closed_form_erss: closed forms exist for power weights x^m only");
  const double m = w.exponent();
  switch (dist.family()) {
    case Family::power:
      return closed_form_power(dist.params().at(0), m, n);
    case Family::exponential:
      return closed_form_exponential(dist.params().at(0), m, n, opts);
    case Family::pareto:
      return closed_form_pareto(dist.params().at(0), m, n);
    default:
      throw std::invalid_argument("closed_form_erss: no closed form for " + dist.describe());
  }
}

}  // namespace gwex
