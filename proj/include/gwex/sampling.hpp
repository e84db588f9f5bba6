#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gwex/distribution.hpp"
#include "gwex/extropy.hpp"
#include "gwex/lambda_profile.hpp"
#include "gwex/order_statistics.hpp"
#include "gwex/rng.hpp"

namespace gwex {

enum class SamplingScheme { srs, rss, erss };

struct SamplingPlan {
  SamplingScheme scheme = SamplingScheme::erss;
  int n = 2;               // set size == units per cycle
  std::int64_t cycles = 1;
  std::uint64_t seed = 0;
};

enum class UnitRole { minimum, maximum, median, rank };

// What a sampled position is, protocol-wise: the rank-th order statistic of a
// set of set_size fresh draws.
struct PositionSpec {
  UnitRole role;
  int rank;
  int set_size;
};

struct SimulatedSample {
  SamplingPlan plan;
  std::vector<PositionSpec> positions;  // size n
  std::vector<double> values;           // cycles x n, row-major

  double at(std::int64_t cycle, int pos) const {
    return values[static_cast<std::size_t>(cycle) * plan.n + pos];
  }
};

namespace detail {

inline std::vector<PositionSpec> position_layout(const SamplingPlan& plan) {
  std::vector<PositionSpec> spec;
  spec.reserve(plan.n);
  const int n = plan.n;
  switch (plan.scheme) {
    case SamplingScheme::srs:
      for (int j = 0; j < n; ++j) spec.push_back({UnitRole::rank, 1, 1});
      break;
    case SamplingScheme::rss:
      for (int j = 0; j < n; ++j) spec.push_back({UnitRole::rank, j + 1, n});
      break;
    case SamplingScheme::erss:
      if (n % 2 == 0) {
        for (int j = 0; j < n / 2; ++j) spec.push_back({UnitRole::minimum, 1, n});
        for (int j = n / 2; j < n; ++j) spec.push_back({UnitRole::maximum, n, n});
      } else {
        for (int j = 0; j < (n - 1) / 2; ++j) spec.push_back({UnitRole::minimum, 1, n});
        for (int j = (n - 1) / 2; j < n - 1; ++j) spec.push_back({UnitRole::maximum, n, n});
        spec.push_back({UnitRole::median, (n + 1) / 2, n});  // median comes from the last set
      }
      break;
  }
  return spec;
}

}  // namespace detail

// Simulates the measurement protocol literally: every retained unit is the
// requested order statistic of a fresh set of iid draws, obtained by sorting,
// never by shortcut sampling of the order statistic itself. Identical plan and
// seed reproduce the sample bit for bit.
inline SimulatedSample draw(const Distribution& dist, const SamplingPlan& plan) {
  if (plan.n < 1) throw std::invalid_argument("draw: set size must be >= 1");
  if (plan.cycles < 1) throw std::invalid_argument("draw: cycles must be >= 1");
  SimulatedSample out;
  out.plan = plan;
  out.positions = detail::position_layout(plan);
  out.values.resize(static_cast<std::size_t>(plan.cycles) * plan.n);
  std::vector<double> set;
  for (std::int64_t c = 0; c < plan.cycles; ++c) {
    for (int j = 0; j < plan.n; ++j) {
      const PositionSpec& p = out.positions[j];
      auto gen = substream(plan.seed, static_cast<std::uint64_t>(c), static_cast<std::uint64_t>(j));
      set.resize(p.set_size);
      for (int k = 0; k < p.set_size; ++k) set[k] = dist.quantile(gen.next_unit());
      std::sort(set.begin(), set.end());
      out.values[static_cast<std::size_t>(c) * plan.n + j] = set[p.rank - 1];
    }
  }
  return out;
}

struct KsReport {
  double statistic = 0.0;
  double critical_value = 0.0;
  double alpha = 0.0;
  std::int64_t sample_size = 0;
  bool pass = false;
};

// Asymptotic critical value of the one-sample Kolmogorov-Smirnov statistic;
// adequate for sample sizes in the tens and beyond.
inline double ks_critical_value(double alpha, std::int64_t n) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw std::invalid_argument("ks_critical_value: alpha outside (0,1)");
  if (n < 1) throw std::invalid_argument("ks_critical_value: empty sample");
  return std::sqrt(-0.5 * std::log(alpha / 2.0) / static_cast<double>(n));
}

inline double ks_statistic(std::vector<double> values, const std::function<double(double)>& cdf) {
  if (values.empty()) throw std::invalid_argument("ks_statistic: empty sample");
  std::sort(values.begin(), values.end());
  const double n = static_cast<double>(values.size());
  double d = 0.0;
  for (std::size_t k = 0; k < values.size(); ++k) {
    const double F = cdf(values[k]);
    d = std::max(d, std::max(F - k / n, (k + 1) / n - F));
  }
  return d;
}

inline KsReport ks_test(std::vector<double> values, const std::function<double(double)>& cdf, double alpha) {
  KsReport r;
  r.sample_size = static_cast<std::int64_t>(values.size());
  r.alpha = alpha;
  r.critical_value = ks_critical_value(alpha, r.sample_size);
  r.statistic = ks_statistic(std::move(values), cdf);
  r.pass = r.statistic < r.critical_value;
  return r;
}

// Tests one position of a simulated sample against its theoretical marginal,
// the order-statistic cdf implied by the protocol.
inline KsReport ks_marginal_check(const SimulatedSample& sample, int position, const Distribution& dist,
                                  double alpha = 0.01) {
  if (position < 0 || position >= sample.plan.n)
    throw std::invalid_argument("ks_marginal_check: position outside the sample layout");
  if (sample.plan.cycles < 1000)
    throw std::invalid_argument("ks_marginal_check: need at least 1000 cycles for a meaningful test");
  const PositionSpec p = sample.positions[position];
  std::vector<double> column(static_cast<std::size_t>(sample.plan.cycles));
  for (std::int64_t c = 0; c < sample.plan.cycles; ++c) column[c] = sample.at(c, position);
  return ks_test(std::move(column),
                 [&](double x) { return order_stat_cdf_from_base(p.rank, p.set_size, dist.cdf(x)); }, alpha);
}

struct McEstimate {
  double value = 0.0;
  double std_error = 0.0;
  std::int64_t draws = 0;
};

// Monte Carlo average of Lambda(B_{k:2n-1}); the beta variate is realized as
// the k-th order statistic of 2n-1 sorted uniforms, matching the protocol
// under test rather than a library beta sampler.
inline McEstimate mc_beta_expectation(const Distribution& dist, const Weight& w, int k, int n,
                                      std::int64_t draws, std::uint64_t seed) {
  if (n < 1 || k < 1 || k > 2 * n - 1) throw std::invalid_argument("mc_beta_expectation: need 1 <= k <= 2n-1");
  if (draws < 1) throw std::invalid_argument("mc_beta_expectation: draws must be >= 1");
  const LambdaProfile lam(dist, w);
  const int set_size = 2 * n - 1;
  std::vector<double> set(set_size);
  double sum = 0.0, sum_sq = 0.0;
  for (std::int64_t d = 0; d < draws; ++d) {
    auto gen = substream(seed, static_cast<std::uint64_t>(d), static_cast<std::uint64_t>(k));
    for (int j = 0; j < set_size; ++j) set[j] = gen.next_unit();
    std::sort(set.begin(), set.end());
    const double v = lam(set[k - 1]);
    sum += v;
    sum_sq += v * v;
  }
  const double mean = sum / draws;
  const double var = std::max(0.0, sum_sq / draws - mean * mean);
  return {mean, std::sqrt(var / draws), draws};
}

// Monte Carlo version of the quantile-domain design formula; factor estimates
// use disjoint substreams so the product's first-order error propagation is
// valid.
inline GweResult mc_gwe_erss(const Distribution& dist, const Weight& w, int n, std::int64_t draws,
                             std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("mc_gwe_erss: n must be >= 1");
  const QConstants q = q_constants(n);
  std::vector<detail::ProductFactor> factors;
  double c;
  auto factor_for = [&](int k, int exponent, std::uint64_t stream) {
    const McEstimate e = mc_beta_expectation(dist, w, k, n, draws, detail::mix_key(seed, stream));
    factors.push_back({e.value, e.std_error, exponent});
  };
  if (n % 2 == 0) {
    c = 0.5 * q.q1;
    factor_for(1, n / 2, 1);
    factor_for(2 * n - 1, n / 2, 2);
  } else {
    c = 0.5 * q.q2;
    if (n > 1) {
      factor_for(1, (n - 1) / 2, 1);
      factor_for(2 * n - 1, (n - 1) / 2, 2);
    }
    factor_for(n, 1, 3);
  }
  return detail::assemble_product(c, factors, Scheme::erss, n, Method::monte_carlo);
}

}  // namespace gwex
