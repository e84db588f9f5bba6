#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "gwex/lambda_profile.hpp"
#include "gwex/order_statistics.hpp"
#include "gwex/quadrature.hpp"
#include "gwex/special_functions.hpp"

namespace gwex {

enum class Scheme { single, srs, erss };
enum class Method { closed_form, quantile_quadrature, density_quadrature, monte_carlo };

struct GweResult {
  double value = 0.0;
  Scheme scheme = Scheme::single;
  int n = 1;
  Method method = Method::density_quadrature;
  double error_estimate = 0.0;
};

namespace detail {

#ifdef GWEX_FAULT_INJECTION
// Test-only hook: scales the odd-n design constant so negative-control runs can
// demonstrate that the route cross-checks actually catch a wrong constant.
// Compiled out of release builds.
inline double& q2_fault_factor() {
  static double factor = 1.0;
  return factor;
}
#endif

inline double log_abs_q1(int n) {
  return 2.0 * n * std::log(static_cast<double>(n)) - n * std::log(2.0 * n - 1.0);
}

// Constant in front of the odd-n product: n-1 extreme factors of n^2/(2n-1)
// plus the median factor (n!)^2 ((n-1)!)^2 / (((n-1)/2)!^4 (2n-1)!).
inline double log_abs_q2(int n) {
  if (n % 2 == 0) throw std::invalid_argument("log_abs_q2: defined for odd n only");
  return 2.0 * (n - 1) * std::log(static_cast<double>(n)) - (n - 1) * std::log(2.0 * n - 1.0) +
         2.0 * log_factorial(n) + 2.0 * log_factorial(n - 1) - 4.0 * log_factorial((n - 1) / 2) -
         log_factorial(2 * n - 1);
}

}  // namespace detail

// q1 scales the even-n design, q2 the odd-n design; both are strictly negative.
// q2 is NaN for even n, where no median unit exists.
struct QConstants {
  int n;
  double q1;
  double q2;
};

inline QConstants q_constants(int n) {
  if (n < 1) throw std::invalid_argument("q_constants: n must be >= 1");
  QConstants q{n, -std::exp(detail::log_abs_q1(n)), std::numeric_limits<double>::quiet_NaN()};
  if (n % 2 == 1) {
    q.q2 = -std::exp(detail::log_abs_q2(n));
#ifdef GWEX_FAULT_INJECTION
    q.q2 *= detail::q2_fault_factor();
#endif
  }
  return q;
}

namespace detail {

template <class F>
IntegralResult integrate_support(const Distribution& dist, F&& f, const QuadratureOptions& opts) {
  const Support s = dist.support();
  if (!s.bounded()) return integrate_halfline(f, s.lower, opts);
  return integrate_interval(f, s.lower, s.upper, opts);
}

struct ProductFactor {
  double value;
  double err;
  int exponent;
};

// value = c * prod v_i^(e_i) with first-order error propagation through each
// factor; safe when a factor is exactly zero.
inline GweResult assemble_product(double c, const std::vector<ProductFactor>& factors, Scheme scheme, int n,
                                  Method method) {
  double value = c;
  for (const auto& f : factors) value *= std::pow(f.value, f.exponent);
  double err = 0.0;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    double deriv = c * factors[i].exponent * std::pow(factors[i].value, factors[i].exponent - 1);
    for (std::size_t j = 0; j < factors.size(); ++j)
      if (j != i) deriv *= std::pow(factors[j].value, factors[j].exponent);
    err += std::abs(deriv) * factors[i].err;
  }
  return {value, scheme, n, method, err};
}

}  // namespace detail

// J(X) = -1/2 * integral of f^2 over the support.
inline GweResult extropy(const Distribution& dist, const QuadratureOptions& opts = {}) {
  const auto r = detail::integrate_support(
      dist, [&](double x) { const double f = dist.pdf(x); return f * f; }, opts);
  return {-0.5 * r.value, Scheme::single, 1, Method::density_quadrature, 0.5 * r.abs_error_estimate};
}

// J^w(X) = -1/2 * integral of w f^2 over the support.
inline GweResult weighted_extropy(const Distribution& dist, const Weight& w, const QuadratureOptions& opts = {}) {
  require_integrable_weight(dist, w);
  const auto r = detail::integrate_support(
      dist, [&](double x) { const double f = dist.pdf(x); return w(x) * f * f; }, opts);
  return {-0.5 * r.value, Scheme::single, 1, Method::density_quadrature, 0.5 * r.abs_error_estimate};
}

// A simple random sample of size n factorizes, so its weighted extropy is
// -1/2 (-2 J^w(X))^n.
inline GweResult gwe_srs(const Distribution& dist, const Weight& w, int n, const QuadratureOptions& opts = {}) {
  if (n < 1) throw std::invalid_argument("gwe_srs: n must be >= 1");
  const GweResult base = weighted_extropy(dist, w, opts);
  const double sigma = -2.0 * base.value;
  const double value = -0.5 * std::pow(sigma, n);
  const double err = std::abs(0.5 * n * std::pow(sigma, n - 1)) * (2.0 * base.error_estimate);
  return {value, Scheme::srs, n, Method::density_quadrature, err};
}

// Quantile-domain route: beta-weighted averages of Lambda for the extreme
// (and, for odd n, median) order statistics, scaled by the design constant.
inline GweResult gwe_erss_quantile(const Distribution& dist, const Weight& w, int n,
                                   const QuadratureOptions& opts = {}) {
  if (n < 1) throw std::invalid_argument("gwe_erss_quantile: n must be >= 1");
  const LambdaProfile lam(dist, w);
  auto avg = [&](int k) {  // E Lambda(B_{k:2n-1}) with B ~ Beta(k, 2n-k)
    return integrate_unit(
        [&](double u) { return lam(u) * beta_pdf(static_cast<double>(k), static_cast<double>(2 * n - k), u); },
        opts);
  };
  const QConstants q = q_constants(n);
  std::vector<detail::ProductFactor> factors;
  double c;
  if (n % 2 == 0) {
    c = 0.5 * q.q1;
    const auto lo = avg(1), hi = avg(2 * n - 1);
    factors.push_back({lo.value, lo.abs_error_estimate, n / 2});
    factors.push_back({hi.value, hi.abs_error_estimate, n / 2});
  } else {
    c = 0.5 * q.q2;
    const auto med = avg(n);
    if (n > 1) {
      const auto lo = avg(1), hi = avg(2 * n - 1);
      factors.push_back({lo.value, lo.abs_error_estimate, (n - 1) / 2});
      factors.push_back({hi.value, hi.abs_error_estimate, (n - 1) / 2});
    }
    factors.push_back({med.value, med.abs_error_estimate, 1});
  }
  return detail::assemble_product(c, factors, Scheme::erss, n, Method::quantile_quadrature);
}

// Density-domain route: the same quantity assembled directly from x-domain
// integrals of w times squared order-statistic densities. Shares no integrals
// or constants with the quantile route, which is what makes the cross-check
// meaningful.
inline GweResult gwe_erss_direct(const Distribution& dist, const Weight& w, int n,
                                 const QuadratureOptions& opts = {}) {
  if (n < 1) throw std::invalid_argument("gwe_erss_direct: n must be >= 1");
  require_integrable_weight(dist, w);
  auto unit_integral = [&](int i) {
    return detail::integrate_support(
        dist,
        [&](double x) {
          const double g = order_stat_pdf_at(dist, i, n, x);
          return w(x) * g * g;
        },
        opts);
  };
  std::vector<detail::ProductFactor> factors;
  if (n % 2 == 0) {
    const auto lo = unit_integral(1), hi = unit_integral(n);
    factors.push_back({lo.value, lo.abs_error_estimate, n / 2});
    factors.push_back({hi.value, hi.abs_error_estimate, n / 2});
  } else {
    const auto med = unit_integral((n + 1) / 2);
    if (n > 1) {
      const auto lo = unit_integral(1), hi = unit_integral(n);
      factors.push_back({lo.value, lo.abs_error_estimate, (n - 1) / 2});
      factors.push_back({hi.value, hi.abs_error_estimate, (n - 1) / 2});
    }
    factors.push_back({med.value, med.abs_error_estimate, 1});
  }
  return detail::assemble_product(-0.5, factors, Scheme::erss, n, Method::density_quadrature);
}

}  // namespace gwex
