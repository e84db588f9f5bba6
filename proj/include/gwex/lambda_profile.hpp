#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

#include "gwex/distribution.hpp"
#include "gwex/weight.hpp"

namespace gwex {

// Rejects pairings whose weighted extropy integral provably diverges, and
// power weights that are undefined on negative support. The divergence gates
// are the tail conditions of the power and pareto families.
inline void require_integrable_weight(const Distribution& dist, const Weight& w) {
  const bool power_like = w.kind() == WeightKind::power_weight || w.kind() == WeightKind::identity;
  if (!power_like) return;
  const double m = w.exponent();
  if (dist.family() == Family::power) {
    const double theta = dist.params().at(0);
    if (!(m + 2.0 * theta - 1.0 > 0.0))
      throw std::domain_error("infeasible weight for " + dist.describe() + ": need m + 2*theta - 1 > 0 (m=" +
                              std::to_string(m) + ")");
  }
  if (dist.family() == Family::pareto) {
    const double alpha = dist.params().at(0);
    if (!(2.0 * alpha - m + 1.0 > 0.0))
      throw std::domain_error("infeasible weight for " + dist.describe() + ": need 2*alpha - m + 1 > 0 (m=" +
                              std::to_string(m) + ")");
  }
  if (dist.support().lower < 0.0 && w.kind() == WeightKind::power_weight) {
    const double r = std::floor(m);
    if (m != r)
      throw std::domain_error("power weight with non-integer exponent is undefined on negative support of " +
                              dist.describe());
  }
}

// Lambda(u) = w(Q(u)) f(Q(u)) for u in (0,1): the quantile-density profile whose
// plain and beta-weighted averages drive every extropy expression here.
class LambdaProfile {
 public:
  LambdaProfile(Distribution dist, Weight w) : dist_(std::move(dist)), w_(std::move(w)) {
    require_integrable_weight(dist_, w_);
  }

  double operator()(double u) const {
    const double x = dist_.quantile(u);
    const double v = w_(x) * dist_.pdf(x);
    // Hard against quantile underflow at the very edges: when Q(u) rounds onto
    // a support endpoint where the density blows up, the product degenerates to
    // 0 * inf. The integrability gate keeps u * Lambda(u) vanishing toward the
    // edges, so zeroing these nodes perturbs no integral. Only the extreme edge
    // is forgiven; a non-finite value in the interior still surfaces.
    if (!std::isfinite(v) && (u < 1e-6 || 1.0 - u < 1e-6)) return 0.0;
    return v;
  }

  // f(Q(u)) alone; equals its reflection f(Q(1-u)) exactly when the
  // distribution is symmetric about its median.
  double quantile_density(double u) const { return dist_.pdf(dist_.quantile(u)); }

  const Distribution& dist() const { return dist_; }
  const Weight& weight() const { return w_; }

 private:
  Distribution dist_;
  Weight w_;
};

}  // namespace gwex
