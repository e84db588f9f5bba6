#include <gtest/gtest.h>

#include <cmath>

#include "gwex/closed_forms.hpp"
#include "gwex/extropy.hpp"
#include "gwex/lambda_profile.hpp"

using gwex::Distribution;
using gwex::Method;
using gwex::Scheme;
using gwex::Weight;

// Reference values in this file are hand derived from the defining integrals:
// J = -1/2 integral f^2, J^w = -1/2 integral w f^2, and the design products
// built from beta-weighted averages of Lambda(u) = w(Q(u)) f(Q(u)).

TEST(Extropy, KnownSingleSampleValues) {
  EXPECT_NEAR(gwex::extropy(Distribution::uniform(0.0, 1.0)).value, -0.5, 1e-10);
  EXPECT_NEAR(gwex::extropy(Distribution::exponential(1.0)).value, -0.25, 1e-10);
  // f = 2x on (0,1): integral of 4 x^2 is 4/3
  EXPECT_NEAR(gwex::extropy(Distribution::triangular_up()).value, -2.0 / 3.0, 1e-10);
  EXPECT_NEAR(gwex::extropy(Distribution::uniform(0.0, 2.0)).value, -0.25, 1e-10);
}

TEST(Extropy, MetadataAndErrorEstimate) {
  const auto r = gwex::extropy(Distribution::exponential(1.0));
  EXPECT_EQ(r.scheme, Scheme::single);
  EXPECT_EQ(r.n, 1);
  EXPECT_EQ(r.method, Method::density_quadrature);
  EXPECT_GE(r.error_estimate, 0.0);
  EXPECT_LT(r.error_estimate, 1e-8);
}

TEST(WeightedExtropy, KnownValues) {
  const auto w1 = Weight::identity();
  const auto w2 = Weight::power(2.0);
  EXPECT_NEAR(gwex::weighted_extropy(Distribution::uniform(0.0, 1.0), w1).value, -0.25, 1e-10);
  EXPECT_NEAR(gwex::weighted_extropy(Distribution::uniform(0.0, 1.0), w2).value, -1.0 / 6.0, 1e-10);
  // the unit-rate exponential gives -1/8 under both the linear and the
  // quadratic weight; that coincidence is what the characterization check uses
  EXPECT_NEAR(gwex::weighted_extropy(Distribution::exponential(1.0), w1).value, -0.125, 1e-10);
  EXPECT_NEAR(gwex::weighted_extropy(Distribution::exponential(1.0), w2).value, -0.125, 1e-10);
  EXPECT_NEAR(gwex::weighted_extropy(Distribution::exponential(2.0), w2).value, -0.0625, 1e-10);
}

TEST(WeightedExtropy, LinearWeightIsScaleFreeOnExponentials) {
  // with w(x) = x the rate cancels: lambda x e^-(lambda x) integrates the same way
  for (double lambda : {0.5, 1.0, 3.0}) {
    EXPECT_NEAR(gwex::weighted_extropy(Distribution::exponential(lambda), Weight::identity()).value,
                -0.125, 1e-10)
        << "lambda = " << lambda;
  }
}

TEST(WeightedExtropy, SymmetricLawOddWeightIsZero) {
  EXPECT_NEAR(gwex::weighted_extropy(Distribution::uniform(-1.0, 1.0), Weight::identity()).value, 0.0,
              1e-12);
}

TEST(WeightedExtropy, InfeasiblePairingsThrow) {
  // power family needs m + 2 theta - 1 > 0
  EXPECT_THROW(gwex::weighted_extropy(Distribution::power(0.3), Weight::power(0.2)), std::domain_error);
  // pareto needs 2 alpha - m + 1 > 0
  EXPECT_THROW(gwex::weighted_extropy(Distribution::pareto(1.0), Weight::power(3.0)), std::domain_error);
  // non-integer power exponent undefined on negative support
  EXPECT_THROW(gwex::weighted_extropy(Distribution::uniform(-1.0, 1.0), Weight::power(2.5)),
               std::domain_error);
  // the same exponent is fine once the support is nonnegative
  EXPECT_NO_THROW(gwex::weighted_extropy(Distribution::uniform(0.0, 1.0), Weight::power(2.5)));
}

TEST(QConstants, KnownValuesAndParity) {
  const auto q2c = gwex::q_constants(2);
  EXPECT_NEAR(q2c.q1, -16.0 / 9.0, 1e-12);
  EXPECT_TRUE(std::isnan(q2c.q2));  // no median unit at even n

  const auto q3c = gwex::q_constants(3);
  EXPECT_NEAR(q3c.q1, -729.0 / 125.0, 1e-12);
  EXPECT_NEAR(q3c.q2, -486.0 / 125.0, 1e-12);

  const auto q1c = gwex::q_constants(1);
  EXPECT_NEAR(q1c.q2, -1.0, 1e-15);

  EXPECT_NEAR(gwex::q_constants(5).q2, -85.053454395018, 1e-9);

  EXPECT_THROW(gwex::q_constants(0), std::invalid_argument);
}

TEST(GweSrs, PowersOfTheSingleSampleValue) {
  const auto w = Weight::identity();
  EXPECT_NEAR(gwex::gwe_srs(Distribution::uniform(0.0, 1.0), w, 2).value, -0.125, 1e-10);
  EXPECT_NEAR(gwex::gwe_srs(Distribution::uniform(0.0, 1.0), w, 3).value, -0.0625, 1e-10);
  EXPECT_NEAR(gwex::gwe_srs(Distribution::exponential(1.0), w, 2).value, -0.03125, 1e-10);

  const auto one = gwex::gwe_srs(Distribution::exponential(1.0), w, 1);
  EXPECT_NEAR(one.value, gwex::weighted_extropy(Distribution::exponential(1.0), w).value, 1e-12);
  EXPECT_EQ(one.scheme, Scheme::srs);

  EXPECT_THROW(gwex::gwe_srs(Distribution::exponential(1.0), w, 0), std::invalid_argument);
}

TEST(GweErss, UniformDesignValues) {
  const auto u01 = Distribution::uniform(0.0, 1.0);
  const auto w = Weight::identity();
  // n = 2: (q1/2) E B(1,3) E B(3,1) = (-8/9)(1/4)(3/4)
  EXPECT_NEAR(gwex::gwe_erss_quantile(u01, w, 2).value, -1.0 / 6.0, 1e-10);
  // n = 3: (q2/2)(1/6)(5/6)(1/2) with q2 = -486/125
  EXPECT_NEAR(gwex::gwe_erss_quantile(u01, w, 3).value, -0.135, 1e-10);
  // n = 5: q2(5) * (1/10)^2 (9/10)^2 (1/2) / 2
  EXPECT_NEAR(gwex::gwe_erss_quantile(u01, w, 5).value, -0.172233245149909, 1e-9);
}

TEST(GweErss, ExponentialDesignValues) {
  const auto e1 = Distribution::exponential(1.0);
  const auto w = Weight::identity();
  // n = 2: (-8/9)(3/16)(13/48)
  EXPECT_NEAR(gwex::gwe_erss_quantile(e1, w, 2).value, -13.0 / 288.0, 1e-10);
  // n = 3: (-243/125)(5/36)(29/120)(37/120) = -3219/160000
  EXPECT_NEAR(gwex::gwe_erss_quantile(e1, w, 3).value, -3219.0 / 160000.0, 1e-10);
}

TEST(GweErss, QuantileAndDirectRoutesAgree) {
  const auto w = Weight::identity();
  const std::pair<Distribution, int> cases[] = {
      {Distribution::uniform(0.0, 1.0), 2}, {Distribution::uniform(0.0, 1.0), 3},
      {Distribution::exponential(1.0), 2},  {Distribution::exponential(1.0), 3},
      {Distribution::exponential(0.5), 4},  {Distribution::power(2.0), 3},
      {Distribution::pareto(3.0), 2},       {Distribution::triangular_up(), 5},
      {Distribution::triangular_down(), 4}};
  for (const auto& [dist, n] : cases) {
    const auto q = gwex::gwe_erss_quantile(dist, w, n);
    const auto d = gwex::gwe_erss_direct(dist, w, n);
    const double scale = std::max({std::abs(q.value), std::abs(d.value), 1e-6});
    EXPECT_NEAR(q.value, d.value, 1e-7 * scale) << dist.describe() << " n = " << n;
    EXPECT_EQ(q.method, Method::quantile_quadrature);
    EXPECT_EQ(d.method, Method::density_quadrature);
    EXPECT_EQ(q.scheme, Scheme::erss);
    EXPECT_EQ(d.n, n);
  }
}

TEST(GweErss, SizeOneReducesToSingleSample) {
  const auto e1 = Distribution::exponential(1.0);
  const auto w = Weight::power(2.0);
  const double single = gwex::weighted_extropy(e1, w).value;
  EXPECT_NEAR(gwex::gwe_erss_quantile(e1, w, 1).value, single, 1e-10);
  EXPECT_NEAR(gwex::gwe_erss_direct(e1, w, 1).value, single, 1e-10);
}

TEST(GweErss, SymmetricSupportOddWeight) {
  const auto sym = Distribution::uniform(-1.0, 1.0);
  const auto w = Weight::identity();
  // odd design sizes vanish exactly for a symmetric law and an odd weight
  EXPECT_NEAR(gwex::gwe_erss_quantile(sym, w, 3).value, 0.0, 1e-12);
  // even sizes do not: n = 2 gives -(q1/2)(1/4)^2 = +1/18, sign flip included
  EXPECT_NEAR(gwex::gwe_erss_quantile(sym, w, 2).value, 1.0 / 18.0, 1e-10);
  EXPECT_NEAR(gwex::gwe_erss_direct(sym, w, 2).value, 1.0 / 18.0, 1e-10);
}

TEST(GweErss, QuadraticWeightExponentialPair) {
  // lambda scaling: J is proportional to lambda^(-n(m-1)), so halving the rate
  // at m = 2, n = 2 multiplies the value by 4
  const auto w = Weight::power(2.0);
  const double j1 = gwex::gwe_erss_quantile(Distribution::exponential(1.0), w, 2).value;
  const double jh = gwex::gwe_erss_quantile(Distribution::exponential(0.5), w, 2).value;
  EXPECT_NEAR(j1, -115.0 / 3456.0, 1e-10);
  EXPECT_NEAR(jh, 4.0 * j1, 1e-9);
}

TEST(GweErss, RejectsBadSize) {
  EXPECT_THROW(gwex::gwe_erss_quantile(Distribution::uniform(0.0, 1.0), Weight::identity(), 0),
               std::invalid_argument);
  EXPECT_THROW(gwex::gwe_erss_direct(Distribution::uniform(0.0, 1.0), Weight::identity(), -1),
               std::invalid_argument);
}

TEST(LambdaProfile, MatchesDefinitionPointwise) {
  const auto e1 = Distribution::exponential(1.0);
  const gwex::LambdaProfile lam(e1, Weight::identity());
  for (double u : {0.1, 0.5, 0.9}) {
    const double x = e1.quantile(u);
    EXPECT_NEAR(lam(u), x * e1.pdf(x), 1e-13);
    EXPECT_NEAR(lam.quantile_density(u), e1.pdf(x), 1e-13);
  }
}
