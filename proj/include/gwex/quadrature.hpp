#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>

#include "gwex/special_functions.hpp"

namespace gwex {

struct QuadratureOptions {
  double abs_tol = 1e-11;
  double rel_tol = 1e-9;
  std::int64_t max_evaluations = 1000000;
};

// converged == true means abs_error_estimate <= max(abs_tol, rel_tol * |value|).
// A result that exhausts the evaluation budget comes back with converged == false
// and the last observed error estimate; it is never silently treated as exact.
struct IntegralResult {
  double value = 0.0;
  double abs_error_estimate = 0.0;
  std::int64_t evaluations = 0;
  bool converged = false;
};

class IntegrandError : public std::runtime_error {
 public:
  IntegrandError(double abscissa, double value)
      : std::runtime_error("integrand not finite at x = " + std::to_string(abscissa) +
                           " (got " + std::to_string(value) + ")"),
        abscissa_(abscissa) {}
  double abscissa() const { return abscissa_; }

 private:
  double abscissa_;
};

namespace detail {

// Node of the tanh-sinh substitution u(t) = 1/2 (1 + tanh((pi/2) sinh t)).
// p is the distance of the node pair from the endpoints: the two symmetric
// abscissas are p and 1 - p. The formula p = 1/(e^s (e^s + e^-s)) is free of
// cancellation, so p stays exact down to the underflow threshold.
struct TanhSinhNode {
  double p;
  double weight;  // du/dt at +-t
};

// At t = 6 the node offset has shrunk to about 1e-275, deep enough that the
// truncated tail is invisible even for strong integrable singularities, while
// p and the weight both stay inside double range.
inline constexpr double TS_T_MAX = 6.0;

inline TanhSinhNode tanh_sinh_node(double t) {
  const double s = 0.5 * std::numbers::pi * std::sinh(t);
  const double es = std::exp(s);
  const double inv = 1.0 / (es + 1.0 / es);  // 1 / (2 cosh s)
  return {inv / es, std::numbers::pi * std::cosh(t) * inv * inv};
}

}  // namespace detail

// Integrates f over (0,1). The substitution clusters nodes double-exponentially
// at both endpoints, so integrable endpoint singularities (log or algebraic)
// converge at the requested tolerance; each refinement level halves the step
// and reuses previous evaluations.
//
// f is called either as f(u) or, if it accepts two doubles, as f(u, 1 - u)
// where the second argument is the exact distance to the right endpoint.
// Near u = 1 the expression 1.0 - u loses all precision, so integrands that
// are singular there should take the two-argument form and use the second
// argument instead. With the one-argument form, nodes whose abscissa rounds
// to exactly 1.0 are skipped; their weight is below 1e-80.
template <class F>
IntegralResult integrate_unit(F&& f, const QuadratureOptions& opts = {}) {
  constexpr double h0 = 0.5;
  constexpr int max_level = 13;
  constexpr bool pass_complement = std::is_invocable_v<F&, double, double>;

  IntegralResult res;
  auto eval = [&](double u, double complement) {
    ++res.evaluations;
    double v;
    if constexpr (pass_complement)
      v = f(u, complement);
    else
      v = f(u);
    if (!std::isfinite(v)) throw IntegrandError(u, v);
    return v;
  };
  auto node_pair = [&](const detail::TanhSinhNode& node) {
    double pair = eval(node.p, 1.0 - node.p);
    const double upper = 1.0 - node.p;
    if (pass_complement || upper < 1.0) pair += eval(upper, node.p);
    return node.weight * pair;
  };

  const auto origin = detail::tanh_sinh_node(0.0);
  double sum = origin.weight * eval(0.5, 0.5);
  for (int k = 1; k * h0 <= detail::TS_T_MAX; ++k) sum += node_pair(detail::tanh_sinh_node(k * h0));
  double integral = h0 * sum;

  double h = h0;
  double err = std::numeric_limits<double>::infinity();
  for (int level = 1; level <= max_level; ++level) {
    h *= 0.5;
    double new_sum = 0.0;
    for (int j = 0; (2 * j + 1) * h <= detail::TS_T_MAX; ++j) {
      if (res.evaluations + 2 > opts.max_evaluations) {
        res.value = integral;
        res.abs_error_estimate = err;
        return res;  // budget exhausted, converged stays false
      }
      new_sum += node_pair(detail::tanh_sinh_node((2 * j + 1) * h));
    }
    const double refined = 0.5 * integral + h * new_sum;
    err = std::abs(refined - integral);
    integral = refined;
    const double tol = std::max(opts.abs_tol, opts.rel_tol * std::abs(integral));
    if (level >= 2 && err <= tol) {
      res.value = integral;
      res.abs_error_estimate = std::max(err, 4.0 * std::numeric_limits<double>::epsilon() * std::abs(integral));
      res.converged = true;
      return res;
    }
  }
  res.value = integral;
  res.abs_error_estimate = err;
  return res;
}

// Integrates g over (lower, +inf) through the algebraic map x = lower + u/(1-u).
// The map is cut off once 1 - u drops below 1e-100 (x beyond roughly 1e100);
// past that point the jacobian would leave double range, and any integrand
// this transform is suited to has long since decayed to nothing.
template <class G>
IntegralResult integrate_halfline(G&& g, double lower = 0.0, const QuadratureOptions& opts = {}) {
  if (!std::isfinite(lower)) throw std::invalid_argument("integrate_halfline: lower endpoint must be finite");
  return integrate_unit(
      [&](double u, double complement) {
        if (complement < 1e-100) return 0.0;
        return g(lower + u / complement) / (complement * complement);
      },
      opts);
}

// Integrates g over the finite interval (a, b).
template <class G>
IntegralResult integrate_interval(G&& g, double a, double b, const QuadratureOptions& opts = {}) {
  if (!(a < b) || !std::isfinite(a) || !std::isfinite(b))
    throw std::invalid_argument("integrate_interval: need finite a < b");
  const double len = b - a;
  auto result = integrate_unit([&](double u) { return g(a + len * u); }, opts);
  result.value *= len;
  result.abs_error_estimate *= len;
  return result;
}

// m-th moment of the (2i-1)-th order statistic of 2n iid standard exponentials.
inline IntegralResult order_stat_moment(int i, int n, double m, const QuadratureOptions& opts = {}) {
  if (m < 0.0) throw std::invalid_argument("order_stat_moment: moment order must be nonnegative");
  return integrate_halfline(
      [=](double x) {
        // past e^-x underflow the pdf is identically zero; skip before pow(x, m)
        // can overflow and turn the product into inf * 0
        if (x > 745.0) return 0.0;
        return std::pow(x, m) * exp_order_stat_pdf_at(i, n, x);
      },
      0.0, opts);
}

}  // namespace gwex
