#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "gwex/distribution.hpp"
#include "gwex/extropy.hpp"
#include "gwex/weight.hpp"

namespace gwex {

inline const char* to_string(Family f) {
  switch (f) {
    case Family::power: return "power";
    case Family::exponential: return "exponential";
    case Family::pareto: return "pareto";
    case Family::uniform: return "uniform";
    case Family::triangular_up: return "triangular_up";
    case Family::triangular_down: return "triangular_down";
    case Family::custom_tabulated: return "custom_tabulated";
    case Family::transformed: return "transformed";
  }
  return "?";
}

inline const char* to_string(Scheme s) {
  switch (s) {
    case Scheme::single: return "single";
    case Scheme::srs: return "srs";
    case Scheme::erss: return "erss";
  }
  return "?";
}

inline const char* to_string(Method m) {
  switch (m) {
    case Method::closed_form: return "closed_form";
    case Method::quantile_quadrature: return "quantile_quadrature";
    case Method::density_quadrature: return "density_quadrature";
    case Method::monte_carlo: return "monte_carlo";
  }
  return "?";
}

inline nlohmann::json to_json(const Distribution& dist) {
  nlohmann::json j;
  j["family"] = to_string(dist.family());
  switch (dist.family()) {
    case Family::custom_tabulated: {
      const auto* tab = dynamic_cast<const detail::TabulatedModel*>(&dist.model());
      if (!tab) throw std::logic_error("to_json: tabulated distribution with unexpected model type");
      j["knots"] = tab->knots();
      j["cdf"] = tab->cdf_values();
      break;
    }
    case Family::transformed:
      // the map is an arbitrary callable; there is nothing faithful to emit
      throw std::invalid_argument("to_json: transformed distributions are not serializable");
    default:
      j["params"] = dist.params();
  }
  return j;
}

inline Distribution distribution_from_json(const nlohmann::json& j) {
  const std::string family = j.at("family").get<std::string>();
  auto param = [&](std::size_t k) { return j.at("params").at(k).get<double>(); };
  if (family == "power") return Distribution::power(param(0));
  if (family == "exponential") return Distribution::exponential(param(0));
  if (family == "pareto") return Distribution::pareto(param(0));
  if (family == "uniform") return Distribution::uniform(param(0), param(1));
  if (family == "triangular_up") return Distribution::triangular_up();
  if (family == "triangular_down") return Distribution::triangular_down();
  if (family == "custom_tabulated")
    return Distribution::tabulated(j.at("knots").get<std::vector<double>>(),
                                   j.at("cdf").get<std::vector<double>>());
  throw std::invalid_argument("distribution_from_json: unknown family '" + family + "'");
}

inline nlohmann::json to_json(const Weight& w) {
  nlohmann::json j;
  switch (w.kind()) {
    case WeightKind::power_weight:
      j["kind"] = "power";
      j["exponent"] = w.exponent();
      break;
    case WeightKind::identity:
      j["kind"] = "identity";
      break;
    case WeightKind::custom_tabulated:
      j["kind"] = "tabulated";
      j["x"] = w.table_x();
      j["values"] = w.table_values();
      break;
    case WeightKind::odd_custom:
      throw std::invalid_argument("to_json: custom odd weights are not serializable");
  }
  return j;
}

inline Weight weight_from_json(const nlohmann::json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "power") return Weight::power(j.at("exponent").get<double>());
  if (kind == "identity") return Weight::identity();
  if (kind == "tabulated")
    return Weight::tabulated(j.at("x").get<std::vector<double>>(), j.at("values").get<std::vector<double>>());
  throw std::invalid_argument("weight_from_json: unknown kind '" + kind + "'");
}

inline nlohmann::json to_json(const GweResult& r) {
  return {{"value", r.value},
          {"scheme", to_string(r.scheme)},
          {"n", r.n},
          {"method", to_string(r.method)},
          {"error_estimate", r.error_estimate}};
}

// Parses command-line style specs like "exponential:1", "uniform:-1,1",
// "power:2.5" or bare "triangular_up". Parameterless uniform and exponential
// get their conventional defaults.
inline Distribution parse_distribution(const std::string& spec) {
  std::string family = spec;
  std::vector<double> args;
  const auto colon = spec.find(':');
  if (colon != std::string::npos) {
    family = spec.substr(0, colon);
    std::string rest = spec.substr(colon + 1);
    std::size_t pos = 0;
    while (pos < rest.size()) {
      std::size_t used = 0;
      args.push_back(std::stod(rest.substr(pos), &used));
      pos += used;
      if (pos < rest.size()) {
        if (rest[pos] != ',') throw std::invalid_argument("parse_distribution: malformed parameter list in '" + spec + "'");
        ++pos;
      }
    }
  }
  auto need = [&](std::size_t count) {
    if (args.size() != count)
      throw std::invalid_argument("parse_distribution: '" + family + "' takes " + std::to_string(count) +
                                  " parameter(s)");
  };
  if (family == "power") {
    need(1);
    return Distribution::power(args[0]);
  }
  if (family == "exponential" || family == "exp") {
    if (args.empty()) return Distribution::exponential(1.0);
    need(1);
    return Distribution::exponential(args[0]);
  }
  if (family == "pareto") {
    need(1);
    return Distribution::pareto(args[0]);
  }
  if (family == "uniform") {
    if (args.empty()) return Distribution::uniform(0.0, 1.0);
    need(2);
    return Distribution::uniform(args[0], args[1]);
  }
  if (family == "triangular_up") {
    need(0);
    return Distribution::triangular_up();
  }
  if (family == "triangular_down") {
    need(0);
    return Distribution::triangular_down();
  }
  throw std::invalid_argument("parse_distribution: unknown family '" + family + "'");
}

}  // namespace gwex
