#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "gwex/closed_forms.hpp"
#include "gwex/extropy.hpp"
#include "gwex/lambda_profile.hpp"
#include "gwex/special_functions.hpp"
#include "gwex/stochastic_orders.hpp"

namespace gwex {

// ---------------------------------------------------------------------------
// ratio of the ERSS value to the SRS value against its design-size bound
// ---------------------------------------------------------------------------

struct RatioBoundReport {
  int n = 2;
  double gwe_erss = 0.0;
  double gwe_srs = 0.0;
  double ratio = 0.0;
  double bound = 0.0;
  bool holds = false;
};

inline double srs_ratio_bound(int n) {
  if (n < 2) throw std::invalid_argument("srs_ratio_bound: need n >= 2");
  double log_bound = 2.0 * n * std::log(static_cast<double>(n));
  if (n % 2 == 1) log_bound -= 2.0 * log_factorial(n - 1);
  return std::exp(log_bound);
}

inline RatioBoundReport verify_srs_ratio_bound(const Distribution& dist, const Weight& w, int n,
                                               const QuadratureOptions& opts = {}) {
  RatioBoundReport report;
  report.n = n;
  const GweResult single = weighted_extropy(dist, w, opts);
  // the SRS value is -(1/2)sigma^n with sigma = -2 J^w; when sigma vanishes
  // the ratio is 0/0 and nothing can be said
  if (std::abs(-2.0 * single.value) < 1e-12)
    throw std::domain_error("verify_srs_ratio_bound: weighted extropy is zero, ratio is undefined");
  report.gwe_erss = gwe_erss_quantile(dist, w, n, opts).value;
  report.gwe_srs = gwe_srs(dist, w, n, opts).value;
  report.ratio = report.gwe_erss / report.gwe_srs;
  report.bound = srs_ratio_bound(n);
  report.holds = report.ratio <= report.bound * (1.0 + 1e-9) + 1e-12;
  return report;
}

// ---------------------------------------------------------------------------
// pushing a design through a monotone map
// ---------------------------------------------------------------------------

enum class PremiseDirection { dominates, dominated, equal, mixed };

inline const char* to_string(PremiseDirection d) {
  switch (d) {
    case PremiseDirection::dominates: return "dominates";
    case PremiseDirection::dominated: return "dominated";
    case PremiseDirection::equal: return "equal";
    case PremiseDirection::mixed: return "mixed";
  }
  return "?";
}

struct TransformComparisonReport {
  // sign of w(eta(x))/eta'(x) - w(x) across the probed support
  PremiseDirection premise = PremiseDirection::mixed;
  double gwe_base = 0.0;
  double gwe_transformed = 0.0;
  // the inequality implied by the premise direction; vacuously true when the
  // sign is mixed and nothing is implied
  bool conclusion_holds = true;
};

inline TransformComparisonReport verify_transform_comparison(const Distribution& base,
                                                             const MonotoneTransform& t, const Weight& w,
                                                             int n, int grid_points = 512,
                                                             const QuadratureOptions& opts = {}) {
  if (grid_points < 8) throw std::invalid_argument("verify_transform_comparison: grid too small");
  TransformComparisonReport report;

  bool any_above = false, any_below = false;
  const double span = 20.0;
  for (int k = 0; k < grid_points; ++k) {
    const double s = -span + 2.0 * span * k / (grid_points - 1);
    const double u = 1.0 / (1.0 + std::exp(-s));
    const double x = base.quantile(u);
    const double slope = t.eta_prime(x);
    if (!(slope > 0.0)) throw std::domain_error("verify_transform_comparison: eta_prime must stay positive");
    const double lhs = w(t.eta(x)) / slope;
    const double rhs = w(x);
    const double tol = 1e-9 * std::max({std::abs(lhs), std::abs(rhs), 1.0});
    if (lhs > rhs + tol) any_above = true;
    if (lhs < rhs - tol) any_below = true;
  }
  if (any_above && any_below)
    report.premise = PremiseDirection::mixed;
  else if (any_above)
    report.premise = PremiseDirection::dominates;
  else if (any_below)
    report.premise = PremiseDirection::dominated;
  else
    report.premise = PremiseDirection::equal;

  report.gwe_base = gwe_erss_quantile(base, w, n, opts).value;
  report.gwe_transformed = gwe_erss_quantile(Distribution::transformed(base, t), w, n, opts).value;

  const double slack = 1e-8 * std::max({std::abs(report.gwe_base), std::abs(report.gwe_transformed), 1.0});
  switch (report.premise) {
    case PremiseDirection::dominates:
      report.conclusion_holds = report.gwe_base >= report.gwe_transformed - slack;
      break;
    case PremiseDirection::dominated:
      report.conclusion_holds = report.gwe_base <= report.gwe_transformed + slack;
      break;
    case PremiseDirection::equal:
      report.conclusion_holds = std::abs(report.gwe_base - report.gwe_transformed) <= slack;
      break;
    case PremiseDirection::mixed:
      report.conclusion_holds = true;
      break;
  }
  return report;
}

// ---------------------------------------------------------------------------
// comparing two designs when one sample is more spread out than the other
// ---------------------------------------------------------------------------

struct DispersiveComparisonReport {
  StochasticOrder premise_order = StochasticOrder::disp;
  OrderReport order_report;
  bool nonnegative = false;         // both supports start at or above zero
  bool weight_increasing = false;   // first weight nondecreasing
  bool weights_ordered = false;     // first weight >= second pointwise
  bool endpoints_compatible = false;  // shared finite right endpoint
  bool density_condition = true;    // f(0) >= g(0) > 0, for the non-disp routes
  bool premise_holds = false;
  double gwe_x = 0.0;
  double gwe_y = 0.0;
  bool conclusion_holds = false;    // gwe_x <= gwe_y
};

namespace detail {

inline bool weight_nondecreasing_on(const Weight& w, const std::vector<double>& xs) {
  double prev = -std::numeric_limits<double>::infinity();
  for (double x : xs) {
    const double v = w(x);
    if (v < prev - 1e-12 * std::max(1.0, std::abs(prev))) return false;
    prev = v;
  }
  return true;
}

}  // namespace detail

// Checks the premises of the spread-based comparison and then the comparison
// itself. The order kind selects how "more spread out" is certified: directly
// (disp), or through one of the shape orders that imply it when the densities
// at the left endpoint are ordered.
inline DispersiveComparisonReport verify_dispersive_comparison(
    const Distribution& X, const Weight& w1, const Distribution& Y, const Weight& w2, int n,
    StochasticOrder kind = StochasticOrder::disp, const OrderCheckOptions& order_opts = {},
    const QuadratureOptions& opts = {}) {
  if (kind != StochasticOrder::disp && kind != StochasticOrder::superadditive &&
      kind != StochasticOrder::star && kind != StochasticOrder::convex_transform)
    throw std::invalid_argument("verify_dispersive_comparison: order kind does not certify spread");

  DispersiveComparisonReport report;
  report.premise_order = kind;
  report.order_report = check_order(kind, X, Y, order_opts);

  const auto probe = detail::merged_grid(X, Y, 256);
  report.weight_increasing = detail::weight_nondecreasing_on(w1, probe);
  bool ordered = true;
  for (double x : probe) {
    const double a = w1(x), b = w2(x);
    if (a < b - 1e-12 * std::max({std::abs(a), std::abs(b), 1.0})) {
      ordered = false;
      break;
    }
  }
  report.weights_ordered = ordered;

  const Support sx = X.support(), sy = Y.support();
  report.nonnegative = sx.lower >= -1e-12 && sy.lower >= -1e-12;
  // the comparison needs a shared finite right endpoint, whichever way the
  // spread premise is certified
  report.endpoints_compatible =
      sx.bounded() && sy.bounded() && std::abs(sx.upper - sy.upper) <= 1e-12 * std::max(1.0, std::abs(sx.upper));
  if (kind != StochasticOrder::disp) {
    // the shape orders only imply the spread comparison when the densities at
    // the origin are ordered
    const double fx = X.pdf(0.0), gy = Y.pdf(0.0);
    report.density_condition = std::isfinite(fx) && std::isfinite(gy) && fx >= gy && gy > 0.0;
  }

  report.premise_holds = report.order_report.verdict == Verdict::yes && report.nonnegative &&
                         report.weight_increasing && report.weights_ordered &&
                         report.endpoints_compatible && report.density_condition;

  report.gwe_x = gwe_erss_quantile(X, w1, n, opts).value;
  report.gwe_y = gwe_erss_quantile(Y, w2, n, opts).value;
  const double slack = 1e-9 * std::max({std::abs(report.gwe_x), std::abs(report.gwe_y), 1.0});
  report.conclusion_holds = report.gwe_x <= report.gwe_y + slack;
  return report;
}

// ---------------------------------------------------------------------------
// separation test on the difference of the two profile functions
// ---------------------------------------------------------------------------

struct DeltaPositionReport {
  int position = 1;        // unit index i in the design layout
  bool evaluable = true;   // the legacy density index can be ill-defined
  double inf_on_positive = std::numeric_limits<double>::infinity();
  double sup_on_negative = -std::numeric_limits<double>::infinity();
  bool separated = false;
};

struct DeltaAnalysisReport {
  double integral_delta = 0.0;  // mean of Delta over (0, 1)
  double mass_positive = 0.0;   // contribution of {Delta > 0}
  double mass_negative = 0.0;   // contribution of {Delta < 0}, as a positive number
  bool positive_region_empty = true;
  bool negative_region_empty = true;
  double single_gwe_x = 0.0;    // one-observation values; their ordering is the
  double single_gwe_y = 0.0;    // second premise, equivalent to integral_delta >= 0
  std::vector<DeltaPositionReport> positions;
  bool premise_holds = false;
  double gwe_x = 0.0;
  double gwe_y = 0.0;
  bool conclusion_holds = false;  // gwe_x <= gwe_y
};

// Compares two designs through Delta(u), the difference of their profile
// functions. If Delta integrates to a nonnegative value and, for every unit
// position, the relevant order-statistic density is at least as large
// wherever Delta > 0 as anywhere Delta < 0, the first design's value cannot
// exceed the second's. `legacy_density_index` switches the density to an
// older indexing convention whose sample size shrinks with the position; it
// is ill-defined for the upper positions and kept only for side-by-side
// comparison.
inline DeltaAnalysisReport delta_analysis(const Distribution& X, const Weight& wx, const Distribution& Y,
                                          const Weight& wy, int n, bool legacy_density_index = false,
                                          int grid_points = 4096, const QuadratureOptions& opts = {}) {
  if (n < 2) throw std::invalid_argument("delta_analysis: need a design size of at least 2");
  if (grid_points < 64) throw std::invalid_argument("delta_analysis: grid too small");

  LambdaProfile lam_x(X, wx), lam_y(Y, wy);
  DeltaAnalysisReport report;

  std::vector<double> us(grid_points), delta(grid_points);
  double scale = 1.0;
  for (int k = 0; k < grid_points; ++k) {
    us[k] = (k + 0.5) / grid_points;
    const double a = lam_x(us[k]), b = lam_y(us[k]);
    delta[k] = a - b;
    scale = std::max({scale, std::abs(a), std::abs(b)});
  }
  const double eps = 1e-10 * scale;

  for (int k = 0; k < grid_points; ++k) {
    if (delta[k] > eps) {
      report.mass_positive += delta[k];
      report.positive_region_empty = false;
    } else if (delta[k] < -eps) {
      report.mass_negative -= delta[k];
      report.negative_region_empty = false;
    }
  }
  report.mass_positive /= grid_points;
  report.mass_negative /= grid_points;
  report.integral_delta = report.mass_positive - report.mass_negative;

  std::vector<int> units = {1, n};
  if (n % 2 == 1) units.insert(units.begin() + 1, (n + 1) / 2);

  bool all_separated = true;
  for (int i : units) {
    DeltaPositionReport pos;
    pos.position = i;
    const double a = 2.0 * i - 1.0;
    const double b = legacy_density_index ? 2.0 * n - 4.0 * i + 2.0 : 2.0 * (n - i) + 1.0;
    pos.evaluable = b > 0.0;
    if (pos.evaluable) {
      for (int k = 0; k < grid_points; ++k) {
        const double phi = beta_pdf(a, b, us[k]);
        if (delta[k] > eps) pos.inf_on_positive = std::min(pos.inf_on_positive, phi);
        if (delta[k] < -eps) pos.sup_on_negative = std::max(pos.sup_on_negative, phi);
      }
      pos.separated = pos.inf_on_positive >= pos.sup_on_negative - 1e-12;
    }
    all_separated = all_separated && pos.evaluable && pos.separated;
    report.positions.push_back(pos);
  }

  report.single_gwe_x = weighted_extropy(X, wx, opts).value;
  report.single_gwe_y = weighted_extropy(Y, wy, opts).value;
  report.premise_holds = all_separated && report.integral_delta >= -eps;
  report.gwe_x = gwe_erss_quantile(X, wx, n, opts).value;
  report.gwe_y = gwe_erss_quantile(Y, wy, n, opts).value;
  const double slack = 1e-9 * std::max({std::abs(report.gwe_x), std::abs(report.gwe_y), 1.0});
  report.conclusion_holds = report.gwe_x <= report.gwe_y + slack;
  return report;
}

// ---------------------------------------------------------------------------
// symmetry: odd designs lose all information under an odd weight
// ---------------------------------------------------------------------------

struct SymmetryCheckReport {
  bool center_candidate = false;    // support straddles zero, so symmetry about 0 is possible
  double profile_asymmetry = 0.0;   // mismatch between the two tails, 0 for a symmetric law
  std::vector<int> odd_n;
  std::vector<double> gwe;          // design value for each odd size
  bool all_zero = false;
  bool symmetric_profile = false;
  bool consistent = false;          // the design values and the profile agree
};

// For a law symmetric about zero and an odd weight, every odd design size
// gives exactly zero; a nonzero value witnesses asymmetry. Reports both views
// so the converse direction is visible too.
inline SymmetryCheckReport check_symmetry_characterization(const Distribution& dist, const Weight& w,
                                                           std::vector<int> odd_sizes = {1, 3, 5},
                                                           double zero_tol = 1e-6,
                                                           const QuadratureOptions& opts = {}) {
  if (!w.is_odd())
    throw std::invalid_argument("check_symmetry_characterization: the weight must be an odd function");
  for (int n : odd_sizes)
    if (n < 1 || n % 2 == 0)
      throw std::invalid_argument("check_symmetry_characterization: design sizes must be odd");

  SymmetryCheckReport report;
  const Support s = dist.support();
  report.center_candidate = s.lower < 0.0 && s.upper > 0.0;

  // probe Q(u) + Q(1-u) and f(Q(u)) - f(Q(1-u)); both vanish identically for
  // a law symmetric about zero
  const int probes = 512;
  const double spread = std::max(1e-12, dist.quantile(0.99) - dist.quantile(0.01));
  double peak_density = 0.0, q_miss = 0.0, d_miss = 0.0;
  for (int k = 1; k <= probes; ++k) {
    const double u = 0.5 * k / (probes + 1.0);
    const double lo = dist.quantile(u), hi = dist.quantile(1.0 - u);
    const double flo = dist.pdf(lo), fhi = dist.pdf(hi);
    q_miss = std::max(q_miss, std::abs(lo + hi));
    d_miss = std::max(d_miss, std::abs(flo - fhi));
    peak_density = std::max({peak_density, flo, fhi});
  }
  report.profile_asymmetry = std::max(q_miss / spread, peak_density > 0.0 ? d_miss / peak_density : 0.0);
  report.symmetric_profile = report.center_candidate && report.profile_asymmetry < 1e-8;

  bool all_zero = true;
  for (int n : odd_sizes) {
    const double value = gwe_erss_quantile(dist, w, n, opts).value;
    report.odd_n.push_back(n);
    report.gwe.push_back(value);
    all_zero = all_zero && std::abs(value) <= zero_tol;
  }
  report.all_zero = all_zero;
  report.consistent = report.all_zero == report.symmetric_profile;
  return report;
}

// ---------------------------------------------------------------------------
// the unit-rate exponential fingerprint
// ---------------------------------------------------------------------------

struct ExponentialCheckReport {
  double gwe_linear = 0.0;     // weighted extropy under w(x) = x
  double gwe_quadratic = 0.0;  // weighted extropy under w(x) = x^2
  double reference = -0.125;
  bool matches = false;
};

// The unit-rate exponential law has weighted extropy -1/8 under both the
// linear and the quadratic weight. The linear value alone does not pin the
// rate (it is scale-free there), so both are required.
inline ExponentialCheckReport check_exponential_characterization(const Distribution& dist, double tol = 1e-8,
                                                                 const QuadratureOptions& opts = {}) {
  ExponentialCheckReport report;
  report.gwe_linear = weighted_extropy(dist, Weight::power(1.0), opts).value;
  report.gwe_quadratic = weighted_extropy(dist, Weight::power(2.0), opts).value;
  report.matches = std::abs(report.gwe_linear - report.reference) <= tol &&
                   std::abs(report.gwe_quadratic - report.reference) <= tol;
  return report;
}

}  // namespace gwex
