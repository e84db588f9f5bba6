#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gwex/quadrature.hpp"

namespace gwex {

enum class Family {
  power,
  exponential,
  pareto,
  uniform,
  triangular_up,
  triangular_down,
  custom_tabulated,
  transformed,  // internal, produced by monotone transformations; not serializable
};

struct Support {
  double lower;
  double upper;  // +inf for half-line families

  bool bounded() const { return std::isfinite(upper); }
  bool interior(double x) const { return x > lower && x < upper; }
};

class DistributionModel {
 public:
  virtual ~DistributionModel() = default;
  virtual double pdf(double x) const = 0;
  virtual double cdf(double x) const = 0;
  virtual double quantile(double u) const = 0;  // pre: 0 <= u <= 1
  virtual Support support() const = 0;
  virtual double mean() const = 0;
  virtual Family family() const = 0;
  virtual std::string describe() const = 0;
  virtual std::vector<double> params() const { return {}; }
};

namespace detail {

inline void check_unit_interval(double u, const char* who) {
  if (!(u >= 0.0 && u <= 1.0)) throw std::domain_error(std::string(who) + ": quantile argument outside [0, 1]");
}

inline std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

class PowerModel final : public DistributionModel {
 public:
  explicit PowerModel(double theta) : theta_(theta) {
    if (!(theta > 0.0) || !std::isfinite(theta))
      throw std::invalid_argument("power: shape theta must be positive and finite");
  }
  double pdf(double x) const override {
    if (x < 0.0 || x > 1.0) return 0.0;
    return theta_ * std::pow(x, theta_ - 1.0);
  }
  double cdf(double x) const override {
    if (x <= 0.0) return 0.0;
    if (x >= 1.0) return 1.0;
    return std::pow(x, theta_);
  }
  double quantile(double u) const override {
    check_unit_interval(u, "power");
    return std::pow(u, 1.0 / theta_);
  }
  Support support() const override { return {0.0, 1.0}; }
  double mean() const override { return theta_ / (theta_ + 1.0); }
  Family family() const override { return Family::power; }
  std::string describe() const override { return "power(theta=" + num(theta_) + ")"; }
  std::vector<double> params() const override { return {theta_}; }

 private:
  double theta_;
};

class ExponentialModel final : public DistributionModel {
 public:
  explicit ExponentialModel(double lambda) : lambda_(lambda) {
    if (!(lambda > 0.0) || !std::isfinite(lambda))
      throw std::invalid_argument("exponential: rate lambda must be positive and finite");
  }
  double pdf(double x) const override { return x < 0.0 ? 0.0 : lambda_ * std::exp(-lambda_ * x); }
  double cdf(double x) const override { return x <= 0.0 ? 0.0 : -std::expm1(-lambda_ * x); }
  double quantile(double u) const override {
    check_unit_interval(u, "exponential");
    return -std::log1p(-u) / lambda_;
  }
  Support support() const override { return {0.0, std::numeric_limits<double>::infinity()}; }
  double mean() const override { return 1.0 / lambda_; }
  Family family() const override { return Family::exponential; }
  std::string describe() const override { return "exponential(lambda=" + num(lambda_) + ")"; }
  std::vector<double> params() const override { return {lambda_}; }

 private:
  double lambda_;
};

class ParetoModel final : public DistributionModel {
 public:
  explicit ParetoModel(double alpha) : alpha_(alpha) {
    if (!(alpha > 0.0) || !std::isfinite(alpha))
      throw std::invalid_argument("pareto: shape alpha must be positive and finite");
  }
  double pdf(double x) const override { return x < 1.0 ? 0.0 : alpha_ * std::pow(x, -alpha_ - 1.0); }
  double cdf(double x) const override { return x <= 1.0 ? 0.0 : 1.0 - std::pow(x, -alpha_); }
  double quantile(double u) const override {
    check_unit_interval(u, "pareto");
    return std::pow(1.0 - u, -1.0 / alpha_);
  }
  Support support() const override { return {1.0, std::numeric_limits<double>::infinity()}; }
  double mean() const override {
    return alpha_ > 1.0 ? alpha_ / (alpha_ - 1.0) : std::numeric_limits<double>::infinity();
  }
  Family family() const override { return Family::pareto; }
  std::string describe() const override { return "pareto(alpha=" + num(alpha_) + ")"; }
  std::vector<double> params() const override { return {alpha_}; }

 private:
  double alpha_;
};

class UniformModel final : public DistributionModel {
 public:
  UniformModel(double a, double b) : a_(a), b_(b) {
    if (!(a < b) || !std::isfinite(a) || !std::isfinite(b))
      throw std::invalid_argument("uniform: need finite bounds with a < b");
  }
  double pdf(double x) const override { return (x < a_ || x > b_) ? 0.0 : 1.0 / (b_ - a_); }
  double cdf(double x) const override {
    if (x <= a_) return 0.0;
    if (x >= b_) return 1.0;
    return (x - a_) / (b_ - a_);
  }
  double quantile(double u) const override {
    check_unit_interval(u, "uniform");
    return a_ + u * (b_ - a_);
  }
  Support support() const override { return {a_, b_}; }
  double mean() const override { return 0.5 * (a_ + b_); }
  Family family() const override { return Family::uniform; }
  std::string describe() const override { return "uniform(" + num(a_) + "," + num(b_) + ")"; }
  std::vector<double> params() const override { return {a_, b_}; }

 private:
  double a_, b_;
};

class TriangularUpModel final : public DistributionModel {
 public:
  double pdf(double x) const override { return (x < 0.0 || x > 1.0) ? 0.0 : 2.0 * x; }
  double cdf(double x) const override {
    if (x <= 0.0) return 0.0;
    if (x >= 1.0) return 1.0;
    return x * x;
  }
  double quantile(double u) const override {
    check_unit_interval(u, "triangular_up");
    return std::sqrt(u);
  }
  Support support() const override { return {0.0, 1.0}; }
  double mean() const override { return 2.0 / 3.0; }
  Family family() const override { return Family::triangular_up; }
  std::string describe() const override { return "triangular_up"; }
};

class TriangularDownModel final : public DistributionModel {
 public:
  double pdf(double x) const override { return (x < 0.0 || x > 1.0) ? 0.0 : 2.0 * (1.0 - x); }
  double cdf(double x) const override {
    if (x <= 0.0) return 0.0;
    if (x >= 1.0) return 1.0;
    return 1.0 - (1.0 - x) * (1.0 - x);
  }
  double quantile(double u) const override {
    check_unit_interval(u, "triangular_down");
    return 1.0 - std::sqrt(1.0 - u);
  }
  Support support() const override { return {0.0, 1.0}; }
  double mean() const override { return 1.0 / 3.0; }
  Family family() const override { return Family::triangular_down; }
  std::string describe() const override { return "triangular_down"; }
};

// Monotone cubic interpolant of a tabulated cdf (Fritsch-Butland slopes, so the
// interpolant never overshoots and the derived density stays nonnegative).
class TabulatedModel final : public DistributionModel {
 public:
  TabulatedModel(std::vector<double> x, std::vector<double> F) : x_(std::move(x)), f_(std::move(F)) {
    if (x_.size() != f_.size() || x_.size() < 2)
      throw std::invalid_argument("custom_tabulated: need matching vectors with at least 2 entries");
    for (std::size_t k = 1; k < x_.size(); ++k) {
      if (!(x_[k] > x_[k - 1]))
        throw std::invalid_argument("custom_tabulated: abscissas must be strictly increasing");
      if (!(f_[k] > f_[k - 1]))
        throw std::invalid_argument("custom_tabulated: cdf values must be strictly increasing");
    }
    if (f_.front() != 0.0 || f_.back() != 1.0)
      throw std::invalid_argument("custom_tabulated: cdf must start at exactly 0 and end at exactly 1");
    build_slopes();
  }

  double pdf(double x) const override {
    if (x <= x_.front() || x >= x_.back()) return 0.0;
    const std::size_t k = segment(x);
    const double h = x_[k + 1] - x_[k];
    const double t = (x - x_[k]) / h;
    return hermite_derivative(t, f_[k], f_[k + 1], d_[k] * h, d_[k + 1] * h) / h;
  }

  double cdf(double x) const override {
    if (x <= x_.front()) return 0.0;
    if (x >= x_.back()) return 1.0;
    const std::size_t k = segment(x);
    const double h = x_[k + 1] - x_[k];
    const double t = (x - x_[k]) / h;
    return hermite(t, f_[k], f_[k + 1], d_[k] * h, d_[k + 1] * h);
  }

  double quantile(double u) const override {
    check_unit_interval(u, "custom_tabulated");
    if (u <= 0.0) return x_.front();
    if (u >= 1.0) return x_.back();
    const auto it = std::upper_bound(f_.begin(), f_.end(), u);
    std::size_t k = static_cast<std::size_t>(it - f_.begin());
    k = (k == 0) ? 0 : k - 1;
    if (k >= x_.size() - 1) k = x_.size() - 2;
    // bisection on the monotone segment; 70 halvings reach full double precision
    double lo = x_[k], hi = x_[k + 1];
    for (int iter = 0; iter < 70 && hi - lo > 1e-16 * (1.0 + std::abs(lo)); ++iter) {
      const double mid = 0.5 * (lo + hi);
      (cdf(mid) < u ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
  }

  Support support() const override { return {x_.front(), x_.back()}; }

  double mean() const override {
    // E X = x_max - integral of the cdf; the Hermite segments integrate exactly
    double acc = 0.0;
    for (std::size_t k = 0; k + 1 < x_.size(); ++k) {
      const double h = x_[k + 1] - x_[k];
      acc += h * (0.5 * (f_[k] + f_[k + 1]) + h * (d_[k] - d_[k + 1]) / 12.0);
    }
    return x_.back() - acc;
  }

  Family family() const override { return Family::custom_tabulated; }
  std::string describe() const override {
    return "custom_tabulated(" + std::to_string(x_.size()) + " knots)";
  }
  const std::vector<double>& knots() const { return x_; }
  const std::vector<double>& cdf_values() const { return f_; }

 private:
  std::size_t segment(double x) const {
    const auto it = std::upper_bound(x_.begin(), x_.end(), x);
    std::size_t k = static_cast<std::size_t>(it - x_.begin());
    k = (k == 0) ? 0 : k - 1;
    return std::min(k, x_.size() - 2);
  }

  static double hermite(double t, double y0, double y1, double m0, double m1) {
    const double t2 = t * t, t3 = t2 * t;
    return (2 * t3 - 3 * t2 + 1) * y0 + (t3 - 2 * t2 + t) * m0 + (-2 * t3 + 3 * t2) * y1 + (t3 - t2) * m1;
  }

  static double hermite_derivative(double t, double y0, double y1, double m0, double m1) {
    const double t2 = t * t;
    return (6 * t2 - 6 * t) * y0 + (3 * t2 - 4 * t + 1) * m0 + (-6 * t2 + 6 * t) * y1 + (3 * t2 - 2 * t) * m1;
  }

  void build_slopes() {
    const std::size_t n = x_.size();
    std::vector<double> sec(n - 1);
    for (std::size_t k = 0; k + 1 < n; ++k) sec[k] = (f_[k + 1] - f_[k]) / (x_[k + 1] - x_[k]);
    d_.assign(n, 0.0);
    d_.front() = sec.front();
    d_.back() = sec.back();
    for (std::size_t k = 1; k + 1 < n; ++k) {
      const double s1 = sec[k - 1], s2 = sec[k];
      if (s1 * s2 <= 0.0) {
        d_[k] = 0.0;
      } else {
        const double h1 = x_[k] - x_[k - 1], h2 = x_[k + 1] - x_[k];
        d_[k] = 3.0 * (h1 + h2) / ((2.0 * h2 + h1) / s1 + (h2 + 2.0 * h1) / s2);
      }
    }
  }

  std::vector<double> x_, f_;
  std::vector<double> d_;
};

}  // namespace detail

// Strictly increasing map with its derivative and inverse, used to push a
// distribution forward through eta.
struct MonotoneTransform {
  std::function<double(double)> eta;
  std::function<double(double)> eta_prime;
  std::function<double(double)> eta_inv;
  std::string name = "eta";
};

// Immutable value wrapper around a model; thread-safe to share and copy.
class Distribution {
 public:
  static Distribution power(double theta) { return wrap(std::make_shared<detail::PowerModel>(theta)); }
  static Distribution exponential(double lambda) {
    return wrap(std::make_shared<detail::ExponentialModel>(lambda));
  }
  static Distribution pareto(double alpha) { return wrap(std::make_shared<detail::ParetoModel>(alpha)); }
  static Distribution uniform(double a, double b) {
    return wrap(std::make_shared<detail::UniformModel>(a, b));
  }
  static Distribution triangular_up() { return wrap(std::make_shared<detail::TriangularUpModel>()); }
  static Distribution triangular_down() { return wrap(std::make_shared<detail::TriangularDownModel>()); }
  static Distribution tabulated(std::vector<double> x, std::vector<double> F) {
    return wrap(std::make_shared<detail::TabulatedModel>(std::move(x), std::move(F)));
  }
  static Distribution transformed(const Distribution& base, const MonotoneTransform& t);

  double pdf(double x) const { return model_->pdf(x); }
  double cdf(double x) const { return model_->cdf(x); }
  double quantile(double u) const { return model_->quantile(u); }
  Support support() const { return model_->support(); }
  double mean() const { return model_->mean(); }
  Family family() const { return model_->family(); }
  std::string describe() const { return model_->describe(); }
  std::vector<double> params() const { return model_->params(); }
  const DistributionModel& model() const { return *model_; }

 private:
  static Distribution wrap(std::shared_ptr<const DistributionModel> m) {
    Distribution d;
    d.model_ = std::move(m);
    return d;
  }
  Distribution() = default;
  std::shared_ptr<const DistributionModel> model_;
};

namespace detail {

class TransformedModel final : public DistributionModel {
 public:
  TransformedModel(Distribution base, MonotoneTransform t) : base_(std::move(base)), t_(std::move(t)) {
    if (!t_.eta || !t_.eta_prime || !t_.eta_inv)
      throw std::invalid_argument("transformed: eta, eta_prime and eta_inv are all required");
    const Support s = base_.support();
    lower_ = t_.eta(s.lower);
    upper_ = std::isfinite(s.upper) ? t_.eta(s.upper) : std::numeric_limits<double>::infinity();
    if (!(lower_ < upper_)) throw std::invalid_argument("transformed: eta must be increasing on the support");
  }

  double pdf(double v) const override {
    if (v <= lower_ || v >= upper_) return 0.0;
    const double x = t_.eta_inv(v);
    const double slope = t_.eta_prime(x);
    if (!(slope > 0.0)) throw std::domain_error("transformed: eta_prime must be positive on the support");
    return base_.pdf(x) / slope;
  }
  double cdf(double v) const override {
    if (v <= lower_) return 0.0;
    if (v >= upper_) return 1.0;
    return base_.cdf(t_.eta_inv(v));
  }
  double quantile(double u) const override {
    check_unit_interval(u, "transformed");
    const double x = base_.quantile(u);
    return std::isfinite(x) ? t_.eta(x) : x;
  }
  Support support() const override { return {lower_, upper_}; }
  double mean() const override {
    // no closed form in general; average of the transformed quantile function
    return integrate_unit([this](double u) { return quantile(u); }).value;
  }
  Family family() const override { return Family::transformed; }
  std::string describe() const override { return t_.name + "(" + base_.describe() + ")"; }

 private:
  Distribution base_;
  MonotoneTransform t_;
  double lower_, upper_;
};

}  // namespace detail

inline Distribution Distribution::transformed(const Distribution& base, const MonotoneTransform& t) {
  return wrap(std::make_shared<detail::TransformedModel>(base, t));
}

}  // namespace gwex
