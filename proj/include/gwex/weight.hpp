#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gwex {

enum class WeightKind { power_weight, identity, odd_custom, custom_tabulated };

// Weight function w(x) applied pointwise inside the extropy integrals.
// Immutable value type, cheap to copy.
class Weight {
 public:
  static Weight power(double m) {
    if (!(m > 0.0) || !std::isfinite(m))
      throw std::invalid_argument("Weight::power: exponent must be positive and finite");
    Weight w(WeightKind::power_weight, "x^" + format_exponent(m));
    w.m_ = m;
    return w;
  }

  static Weight identity() {
    Weight w(WeightKind::identity, "x");
    w.m_ = 1.0;
    return w;
  }

  // fn must satisfy fn(-x) == -fn(x); the flag is declared, callers that rely
  // on oddness should verify it on their own grid.
  static Weight odd(std::function<double(double)> fn, std::string name = "odd_custom") {
    if (!fn) throw std::invalid_argument("Weight::odd: empty function");
    Weight w(WeightKind::odd_custom, std::move(name));
    w.fn_ = std::move(fn);
    return w;
  }

  static Weight tabulated(std::vector<double> x, std::vector<double> values) {
    if (x.size() != values.size() || x.size() < 2)
      throw std::invalid_argument("Weight::tabulated: need matching vectors with at least 2 entries");
    for (std::size_t k = 1; k < x.size(); ++k)
      if (!(x[k] > x[k - 1]))
        throw std::invalid_argument("Weight::tabulated: abscissas must be strictly increasing");
    Weight w(WeightKind::custom_tabulated, "tabulated");
    w.tab_x_ = std::move(x);
    w.tab_w_ = std::move(values);
    return w;
  }

  double operator()(double x) const {
    switch (kind_) {
      case WeightKind::identity:
        return x;
      case WeightKind::power_weight:
        if (x > 0.0) return std::pow(x, m_);
        if (x == 0.0) return 0.0;
        if (is_integral_exponent()) return std::pow(x, m_);
        throw std::domain_error("power weight with non-integer exponent is undefined for negative x");
      case WeightKind::odd_custom:
        return fn_(x);
      case WeightKind::custom_tabulated:
        return interpolate(x);
    }
    throw std::logic_error("Weight: unknown kind");
  }

  WeightKind kind() const { return kind_; }
  const std::string& name() const { return name_; }

  // power_weight / identity exponent; meaningless for the custom kinds.
  double exponent() const { return m_; }

  bool is_odd() const {
    switch (kind_) {
      case WeightKind::identity:
        return true;
      case WeightKind::odd_custom:
        return true;
      case WeightKind::power_weight:
        return is_integral_exponent() && (std::llround(m_) % 2 != 0);
      case WeightKind::custom_tabulated:
        return false;
    }
    return false;
  }

  const std::vector<double>& table_x() const { return tab_x_; }
  const std::vector<double>& table_values() const { return tab_w_; }

 private:
  Weight(WeightKind kind, std::string name) : kind_(kind), name_(std::move(name)) {}

  bool is_integral_exponent() const {
    return m_ == std::floor(m_) && std::abs(m_) < 1e15;
  }

  // linear between knots, clamped to the end values outside the table
  double interpolate(double x) const {
    if (x <= tab_x_.front()) return tab_w_.front();
    if (x >= tab_x_.back()) return tab_w_.back();
    const auto it = std::upper_bound(tab_x_.begin(), tab_x_.end(), x);
    const std::size_t hi = static_cast<std::size_t>(it - tab_x_.begin());
    const double t = (x - tab_x_[hi - 1]) / (tab_x_[hi] - tab_x_[hi - 1]);
    return tab_w_[hi - 1] + t * (tab_w_[hi] - tab_w_[hi - 1]);
  }

  static std::string format_exponent(double m) {
    if (m == std::floor(m) && std::abs(m) < 1e6) return std::to_string(static_cast<long long>(m));
    return std::to_string(m);
  }

  WeightKind kind_;
  std::string name_;
  double m_ = 1.0;
  std::function<double(double)> fn_;
  std::vector<double> tab_x_;
  std::vector<double> tab_w_;
};

}  // namespace gwex
