#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gwex/distribution.hpp"

namespace gwex {

enum class StochasticOrder { st, lr, hr, disp, star, convex_transform, superadditive };

enum class Verdict { yes, no, inconclusive };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::yes: return "yes";
    case Verdict::no: return "no";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "?";
}

inline const char* to_string(StochasticOrder o) {
  switch (o) {
    case StochasticOrder::st: return "st";
    case StochasticOrder::lr: return "lr";
    case StochasticOrder::hr: return "hr";
    case StochasticOrder::disp: return "disp";
    case StochasticOrder::star: return "star";
    case StochasticOrder::convex_transform: return "convex_transform";
    case StochasticOrder::superadditive: return "superadditive";
  }
  return "?";
}

struct OrderCheckOptions {
  int grid_points = 2048;
  double tolerance_scale = 1e-9;  // violations below tol*scale are noise
  // violations between tol and 10*tol are reported as inconclusive rather
  // than as a counterexample
  double inconclusive_band = 10.0;
};

struct OrderWitness {
  double x = 0.0;
  double y = 0.0;  // second coordinate for pairwise conditions, else == x
  double violation = 0.0;
};

struct OrderReport {
  StochasticOrder order;
  Verdict verdict = Verdict::inconclusive;
  double max_violation = 0.0;
  std::optional<OrderWitness> witness;
  int grid_points = 0;
};

namespace detail {

// probe abscissas from the quantile function, logit-spaced in probability so
// both support endpoints are approached geometrically
inline std::vector<double> quantile_grid(const Distribution& d, int points, double span = 27.0) {
  std::vector<double> xs;
  xs.reserve(points);
  for (int k = 0; k < points; ++k) {
    const double t = -span + 2.0 * span * k / (points - 1);
    const double u = 1.0 / (1.0 + std::exp(-t));
    xs.push_back(d.quantile(u));
  }
  return xs;
}

// The checks built on H = G^-1 o F lose accuracy once F(x) rounds into the
// last few representable doubles below 1, so they probe a narrower band.
constexpr double kMapSpan = 9.2;  // u from ~1e-4 to 1 - 1e-4

inline std::vector<double> merged_grid(const Distribution& x, const Distribution& y, int points) {
  auto a = quantile_grid(x, points / 2);
  auto b = quantile_grid(y, points / 2);
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  return a;
}

class ViolationTracker {
 public:
  explicit ViolationTracker(const OrderCheckOptions& opts) : opts_(opts) {}

  void observe(double violation, double scale, double x, double y) {
    const double tol = opts_.tolerance_scale * std::max(1.0, scale);
    if (violation <= tol) return;
    if (violation > opts_.inconclusive_band * tol) {
      hard_ = true;
      if (!witness_ || violation > witness_->violation) witness_ = OrderWitness{x, y, violation};
    } else {
      soft_ = true;
    }
    max_ = std::max(max_, violation);
  }

  void finish(OrderReport& report) const {
    report.max_violation = max_;
    if (hard_) {
      report.verdict = Verdict::no;
      report.witness = witness_;
    } else if (soft_) {
      report.verdict = Verdict::inconclusive;
    } else {
      report.verdict = Verdict::yes;
    }
  }

 private:
  OrderCheckOptions opts_;
  bool hard_ = false, soft_ = false;
  double max_ = 0.0;
  std::optional<OrderWitness> witness_;
};

}  // namespace detail

// Grid verdict on "X precedes Y" in the requested order. yes/no are grid
// claims at the stated tolerance, not proofs; borderline violations come back
// inconclusive.
inline OrderReport check_order(StochasticOrder order, const Distribution& X, const Distribution& Y,
                               const OrderCheckOptions& opts = {}) {
  if (opts.grid_points < 16) throw std::invalid_argument("check_order: grid too small to be meaningful");
  OrderReport report;
  report.order = order;
  report.grid_points = opts.grid_points;
  detail::ViolationTracker track(opts);

  auto H = [&](double x) { return Y.quantile(X.cdf(x)); };  // increasing rearrangement map

  switch (order) {
    case StochasticOrder::st: {
      // X <= Y in the usual order: F(x) >= G(x) everywhere
      for (double x : detail::merged_grid(X, Y, opts.grid_points))
        track.observe(Y.cdf(x) - X.cdf(x), 1.0, x, x);
      break;
    }
    case StochasticOrder::lr: {
      // density ratio f/g nonincreasing, checked as adjacent cross products
      const auto grid = detail::merged_grid(X, Y, opts.grid_points);
      for (std::size_t k = 0; k + 1 < grid.size(); ++k) {
        const double f1 = X.pdf(grid[k]), g1 = Y.pdf(grid[k]);
        const double f2 = X.pdf(grid[k + 1]), g2 = Y.pdf(grid[k + 1]);
        if (!std::isfinite(f1) || !std::isfinite(f2) || !std::isfinite(g1) || !std::isfinite(g2)) continue;
        const double scale = std::max({std::abs(f1 * g2), std::abs(f2 * g1), 1.0});
        track.observe(f2 * g1 - f1 * g2, scale, grid[k], grid[k + 1]);
      }
      break;
    }
    case StochasticOrder::hr: {
      // survival ratio (1-G)/(1-F) nondecreasing
      const auto grid = detail::merged_grid(X, Y, opts.grid_points);
      for (std::size_t k = 0; k + 1 < grid.size(); ++k) {
        const double sf1 = 1.0 - X.cdf(grid[k]), sg1 = 1.0 - Y.cdf(grid[k]);
        const double sf2 = 1.0 - X.cdf(grid[k + 1]), sg2 = 1.0 - Y.cdf(grid[k + 1]);
        track.observe(sg1 * sf2 - sg2 * sf1, 1.0, grid[k], grid[k + 1]);
      }
      break;
    }
    case StochasticOrder::disp: {
      // G^-1(F(x)) - x nondecreasing
      const auto grid = detail::quantile_grid(X, opts.grid_points, detail::kMapSpan);
      double prev = H(grid.front()) - grid.front();
      for (std::size_t k = 1; k < grid.size(); ++k) {
        const double cur = H(grid[k]) - grid[k];
        if (std::isfinite(prev) && std::isfinite(cur))
          track.observe(prev - cur, std::max(std::abs(prev), std::abs(cur)), grid[k - 1], grid[k]);
        prev = cur;
      }
      break;
    }
    case StochasticOrder::star: {
      // G^-1(F(x))/x nondecreasing on x > 0
      const auto grid = detail::quantile_grid(X, opts.grid_points, detail::kMapSpan);
      bool have_prev = false;
      double hx_prev = 0.0, x_prev = 0.0;
      for (double x : grid) {
        if (!(x > 0.0)) continue;
        const double hx = H(x);
        if (!std::isfinite(hx)) break;
        if (have_prev)
          track.observe(hx_prev * x - hx * x_prev, std::max({std::abs(hx * x_prev), std::abs(hx_prev * x), 1.0}),
                        x_prev, x);
        hx_prev = hx;
        x_prev = x;
        have_prev = true;
      }
      break;
    }
    case StochasticOrder::convex_transform: {
      // G^-1(F(x)) convex: no point may sit above the chord of a bracketing
      // pair. Chords are taken over several widths; slopes of adjacent tight
      // pairs would drown in cancellation noise near the endpoints.
      const auto grid = detail::quantile_grid(X, opts.grid_points, detail::kMapSpan);
      std::vector<double> h(grid.size());
      for (std::size_t k = 0; k < grid.size(); ++k) h[k] = H(grid[k]);
      for (std::size_t stride = 8; stride <= grid.size() / 2; stride *= 4) {
        for (std::size_t k = 0; k + stride < grid.size(); k += stride / 2) {
          const std::size_t mid = k + stride / 2;
          if (!std::isfinite(h[k]) || !std::isfinite(h[mid]) || !std::isfinite(h[k + stride])) continue;
          const double chord =
              h[k] + (h[k + stride] - h[k]) * (grid[mid] - grid[k]) / (grid[k + stride] - grid[k]);
          track.observe(h[mid] - chord, std::max({std::abs(h[k]), std::abs(h[k + stride]), 1.0}), grid[k],
                        grid[k + stride]);
        }
      }
      break;
    }
    case StochasticOrder::superadditive: {
      // H(x + y) >= H(x) + H(y) for x, y >= 0, checked on a coarser pair
      // grid; sums are kept inside the band where F is still resolvable
      const int side = std::max(16, static_cast<int>(std::sqrt(2.0 * opts.grid_points)));
      const double xmax = X.quantile(1.0 - 1e-4);
      const auto full = detail::quantile_grid(X, side, detail::kMapSpan);
      std::vector<double> pts;
      for (double x : full)
        if (x >= 0.0) pts.push_back(x);
      for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i; j < pts.size(); ++j) {
          if (!(pts[i] + pts[j] <= xmax)) continue;
          const double hsum = H(pts[i] + pts[j]);
          if (!std::isfinite(hsum)) continue;
          const double hx = H(pts[i]), hy = H(pts[j]);
          track.observe(hx + hy - hsum, std::max({std::abs(hx), std::abs(hy), std::abs(hsum)}), pts[i], pts[j]);
        }
      break;
    }
  }
  track.finish(report);
  return report;
}

}  // namespace gwex
