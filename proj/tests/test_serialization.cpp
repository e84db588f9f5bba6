#include <gtest/gtest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "json.hpp"

#include "gwex/distribution.hpp"
#include "gwex/extropy.hpp"
#include "gwex/serialization.hpp"
#include "gwex/weight.hpp"

using gwex::Distribution;
using gwex::Weight;

namespace {

// round-trips are judged by behavior, not object identity
void expect_same_law(const Distribution& a, const Distribution& b) {
  EXPECT_EQ(a.family(), b.family());
  for (double u : {0.05, 0.25, 0.5, 0.75, 0.95}) {
    const double x = a.quantile(u);
    EXPECT_NEAR(a.cdf(x), b.cdf(x), 1e-12) << "u = " << u;
    EXPECT_NEAR(a.pdf(x), b.pdf(x), 1e-9 * std::max(1.0, a.pdf(x)));
  }
}

}  // namespace

TEST(DistributionJson, ParametricFamiliesRoundTrip) {
  const Distribution zoo[] = {
      Distribution::power(2.5),          Distribution::exponential(0.7),
      Distribution::pareto(3.0),         Distribution::uniform(-1.0, 4.0),
      Distribution::triangular_up(),     Distribution::triangular_down(),
  };
  for (const auto& dist : zoo) {
    const auto j = gwex::to_json(dist);
    EXPECT_EQ(j.at("family").get<std::string>(), gwex::to_string(dist.family()));
    expect_same_law(dist, gwex::distribution_from_json(j));
  }
}

TEST(DistributionJson, TabulatedCarriesItsKnots) {
  const std::vector<double> x{0.0, 0.5, 1.0, 2.0};
  const std::vector<double> cdf{0.0, 0.4, 0.7, 1.0};
  const auto dist = Distribution::tabulated(x, cdf);
  const auto j = gwex::to_json(dist);
  EXPECT_EQ(j.at("family").get<std::string>(), "custom_tabulated");
  EXPECT_EQ(j.at("knots").get<std::vector<double>>(), x);
  EXPECT_EQ(j.at("cdf").get<std::vector<double>>(), cdf);
  expect_same_law(dist, gwex::distribution_from_json(j));
}

TEST(DistributionJson, TransformedIsRejected) {
  gwex::MonotoneTransform t;
  t.eta = [](double x) { return 2.0 * x; };
  t.eta_prime = [](double) { return 2.0; };
  t.eta_inv = [](double v) { return v / 2.0; };
  t.name = "doubling";
  const auto dist = Distribution::transformed(Distribution::exponential(1.0), t);
  EXPECT_THROW(gwex::to_json(dist), std::invalid_argument);
}

TEST(DistributionJson, UnknownFamilyIsRejected) {
  nlohmann::json j{{"family", "cauchy"}, {"params", {1.0}}};
  EXPECT_THROW(gwex::distribution_from_json(j), std::invalid_argument);
}

TEST(WeightJson, RoundTrips) {
  {
    const auto j = gwex::to_json(Weight::power(2.5));
    EXPECT_EQ(j.at("kind").get<std::string>(), "power");
    EXPECT_DOUBLE_EQ(j.at("exponent").get<double>(), 2.5);
    const auto back = gwex::weight_from_json(j);
    EXPECT_DOUBLE_EQ(back(2.0), std::pow(2.0, 2.5));
  }
  {
    const auto j = gwex::to_json(Weight::identity());
    EXPECT_EQ(j.at("kind").get<std::string>(), "identity");
    EXPECT_DOUBLE_EQ(gwex::weight_from_json(j)(-3.0), -3.0);
  }
  {
    const std::vector<double> x{0.0, 1.0, 2.0};
    const std::vector<double> v{0.0, 1.0, 4.0};
    const auto j = gwex::to_json(Weight::tabulated(x, v));
    EXPECT_EQ(j.at("kind").get<std::string>(), "tabulated");
    EXPECT_EQ(j.at("x").get<std::vector<double>>(), x);
    const auto back = gwex::weight_from_json(j);
    EXPECT_DOUBLE_EQ(back(0.5), 0.5);  // linear interpolation between knots
  }
}

TEST(WeightJson, CustomOddIsRejected) {
  const auto w = Weight::odd([](double x) { return x * x * x; }, "cube");
  EXPECT_THROW(gwex::to_json(w), std::invalid_argument);
}

TEST(WeightJson, UnknownKindIsRejected) {
  nlohmann::json j{{"kind", "gaussian"}};
  EXPECT_THROW(gwex::weight_from_json(j), std::invalid_argument);
}

TEST(ResultJson, CarriesAllFields) {
  const auto r = gwex::gwe_srs(Distribution::exponential(1.0), Weight::identity(), 2);
  const auto j = gwex::to_json(r);
  EXPECT_DOUBLE_EQ(j.at("value").get<double>(), r.value);
  EXPECT_EQ(j.at("scheme").get<std::string>(), "srs");
  EXPECT_EQ(j.at("n").get<int>(), 2);
  EXPECT_EQ(j.at("method").get<std::string>(), "density_quadrature");
  EXPECT_TRUE(j.contains("error_estimate"));
}

TEST(ParseDistribution, AcceptsTheCliGrammar) {
  EXPECT_EQ(gwex::parse_distribution("exponential:2").family(), gwex::Family::exponential);
  EXPECT_NEAR(gwex::parse_distribution("exp:2").quantile(0.5), std::log(2.0) / 2.0, 1e-12);
  EXPECT_NEAR(gwex::parse_distribution("exponential").quantile(0.5), std::log(2.0), 1e-12);

  const auto u = gwex::parse_distribution("uniform");
  EXPECT_DOUBLE_EQ(u.support().lower, 0.0);
  EXPECT_DOUBLE_EQ(u.support().upper, 1.0);
  const auto u2 = gwex::parse_distribution("uniform:-1,3");
  EXPECT_DOUBLE_EQ(u2.support().lower, -1.0);
  EXPECT_DOUBLE_EQ(u2.support().upper, 3.0);

  EXPECT_NEAR(gwex::parse_distribution("power:2").cdf(0.5), 0.25, 1e-12);
  EXPECT_EQ(gwex::parse_distribution("pareto:3.5").family(), gwex::Family::pareto);
  EXPECT_EQ(gwex::parse_distribution("triangular_up").family(), gwex::Family::triangular_up);
  EXPECT_EQ(gwex::parse_distribution("triangular_down").family(), gwex::Family::triangular_down);
}

TEST(ParseDistribution, RejectsBadSpecs) {
  EXPECT_THROW(gwex::parse_distribution("cauchy:1"), std::invalid_argument);
  EXPECT_THROW(gwex::parse_distribution("power"), std::invalid_argument);        // missing exponent
  EXPECT_THROW(gwex::parse_distribution("uniform:1"), std::invalid_argument);    // needs both ends
  EXPECT_THROW(gwex::parse_distribution("triangular_up:1"), std::invalid_argument);
  EXPECT_THROW(gwex::parse_distribution("uniform:1;3"), std::invalid_argument);  // bad separator
  EXPECT_THROW(gwex::parse_distribution("exponential:abc"), std::invalid_argument);
}
