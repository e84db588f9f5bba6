#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "gwex/theorems.hpp"

using gwex::Distribution;
using gwex::MonotoneTransform;
using gwex::PremiseDirection;
using gwex::StochasticOrder;
using gwex::Verdict;
using gwex::Weight;

namespace {

MonotoneTransform expm1_map() {
  MonotoneTransform t;
  t.eta = [](double x) { return std::expm1(x); };
  t.eta_prime = [](double x) { return std::exp(x); };
  t.eta_inv = [](double v) { return std::log1p(v); };
  t.name = "expm1";
  return t;
}

MonotoneTransform linear_map(double slope) {
  MonotoneTransform t;
  t.eta = [slope](double x) { return slope * x; };
  t.eta_prime = [slope](double) { return slope; };
  t.eta_inv = [slope](double v) { return v / slope; };
  t.name = "linear";
  return t;
}

}  // namespace

TEST(RatioBound, BoundValues) {
  EXPECT_NEAR(gwex::srs_ratio_bound(2), 16.0, 1e-9);
  EXPECT_NEAR(gwex::srs_ratio_bound(3), 182.25, 1e-9);              // 3^6 / (2!)^2
  EXPECT_NEAR(gwex::srs_ratio_bound(4), 65536.0, 1e-6);             // 4^8
  EXPECT_NEAR(gwex::srs_ratio_bound(5), 9765625.0 / 576.0, 1e-5);   // 5^10 / (4!)^2
  EXPECT_THROW(gwex::srs_ratio_bound(1), std::invalid_argument);
}

TEST(RatioBound, UniformDesignsStayUnderTheBound) {
  const auto u01 = Distribution::uniform(0.0, 1.0);
  const auto w = Weight::identity();
  {
    const auto r = gwex::verify_srs_ratio_bound(u01, w, 2);
    EXPECT_NEAR(r.gwe_erss, -1.0 / 6.0, 1e-9);
    EXPECT_NEAR(r.gwe_srs, -0.125, 1e-9);
    EXPECT_NEAR(r.ratio, 4.0 / 3.0, 1e-8);
    EXPECT_NEAR(r.bound, 16.0, 1e-9);
    EXPECT_TRUE(r.holds);
  }
  {
    const auto r = gwex::verify_srs_ratio_bound(u01, w, 3);
    EXPECT_NEAR(r.ratio, 2.16, 1e-8);  // (-0.135) / (-0.0625)
    EXPECT_NEAR(r.bound, 182.25, 1e-9);
    EXPECT_TRUE(r.holds);
  }
}

TEST(RatioBound, HoldsAcrossFamiliesAndSizes) {
  const auto w = Weight::identity();
  for (const auto& dist : {Distribution::exponential(1.0), Distribution::power(2.0),
                           Distribution::pareto(3.0), Distribution::triangular_up()}) {
    for (int n = 2; n <= 5; ++n) {
      const auto r = gwex::verify_srs_ratio_bound(dist, w, n);
      EXPECT_TRUE(r.holds) << dist.describe() << " n=" << n << " ratio=" << r.ratio;
    }
  }
}

TEST(RatioBound, ZeroWeightedExtropyIsRejected) {
  // symmetric law, odd weight: J^w = 0 and the ratio is meaningless
  EXPECT_THROW(gwex::verify_srs_ratio_bound(Distribution::uniform(-1.0, 1.0), Weight::identity(), 2),
               std::domain_error);
}

TEST(TransformComparison, GrowthMapLowersTheValue) {
  // w(e^x - 1)/e^x = 4 sinh^2(x/2) e^... >= x^2 pointwise, so the transformed
  // design cannot sit above the base one
  const auto r = gwex::verify_transform_comparison(Distribution::exponential(1.0), expm1_map(),
                                                   Weight::power(2.0), 2);
  EXPECT_EQ(r.premise, PremiseDirection::dominates);
  EXPECT_NEAR(r.gwe_base, -115.0 / 3456.0, 1e-9);
  EXPECT_NEAR(r.gwe_transformed, -4.0 / 75.0, 1e-8);
  EXPECT_TRUE(r.conclusion_holds);
  EXPECT_LE(r.gwe_transformed, r.gwe_base);
}

TEST(TransformComparison, LinearMapWithIdentityWeightIsNeutral) {
  // w(x/2)/(1/2) = x exactly: the comparison is an equality, and indeed the
  // halved exponential has the same design value (the linear weight is
  // scale-free on exponentials)
  const auto r = gwex::verify_transform_comparison(Distribution::exponential(1.0), linear_map(0.5),
                                                   Weight::identity(), 3);
  EXPECT_EQ(r.premise, PremiseDirection::equal);
  EXPECT_TRUE(r.conclusion_holds);
  EXPECT_NEAR(r.gwe_base, r.gwe_transformed, 1e-8);
}

TEST(TransformComparison, QuadraticWeightSeesTheScale) {
  {
    // (2x)^2 / 2 = 2 x^2 > x^2: stretching dominates
    const auto r = gwex::verify_transform_comparison(Distribution::exponential(1.0), linear_map(2.0),
                                                     Weight::power(2.0), 2);
    EXPECT_EQ(r.premise, PremiseDirection::dominates);
    EXPECT_TRUE(r.conclusion_holds);
    EXPECT_NEAR(r.gwe_transformed, 4.0 * r.gwe_base, 1e-7);
  }
  {
    // (x/2)^2 / (1/2) = x^2 / 2 < x^2: shrinking is dominated
    const auto r = gwex::verify_transform_comparison(Distribution::exponential(1.0), linear_map(0.5),
                                                     Weight::power(2.0), 2);
    EXPECT_EQ(r.premise, PremiseDirection::dominated);
    EXPECT_TRUE(r.conclusion_holds);
    EXPECT_NEAR(r.gwe_transformed, 0.25 * r.gwe_base, 1e-7);
  }
}

TEST(TransformComparison, Validation) {
  EXPECT_THROW(gwex::verify_transform_comparison(Distribution::exponential(1.0), expm1_map(),
                                                 Weight::identity(), 2, 4),
               std::invalid_argument);
  auto bad = linear_map(1.0);
  bad.eta_prime = [](double) { return -1.0; };
  EXPECT_THROW(gwex::verify_transform_comparison(Distribution::exponential(1.0), bad, Weight::identity(), 2),
               std::domain_error);
}

TEST(DispersiveComparison, NarrowUniformBeatsWideUniform) {
  const auto r = gwex::verify_dispersive_comparison(Distribution::uniform(0.5, 1.0), Weight::identity(),
                                                    Distribution::uniform(0.0, 1.0), Weight::identity(), 2);
  EXPECT_EQ(r.order_report.verdict, Verdict::yes);
  EXPECT_TRUE(r.nonnegative);
  EXPECT_TRUE(r.weight_increasing);
  EXPECT_TRUE(r.weights_ordered);
  EXPECT_TRUE(r.endpoints_compatible);
  EXPECT_TRUE(r.premise_holds);
  EXPECT_NEAR(r.gwe_x, -35.0 / 18.0, 1e-8);
  EXPECT_NEAR(r.gwe_y, -1.0 / 6.0, 1e-9);
  EXPECT_TRUE(r.conclusion_holds);
}

TEST(DispersiveComparison, ReversedPairFailsPremiseAndConclusion) {
  const auto r = gwex::verify_dispersive_comparison(Distribution::uniform(0.0, 1.0), Weight::identity(),
                                                    Distribution::uniform(0.5, 1.0), Weight::identity(), 2);
  EXPECT_EQ(r.order_report.verdict, Verdict::no);
  EXPECT_FALSE(r.premise_holds);
  EXPECT_FALSE(r.conclusion_holds);
}

TEST(DispersiveComparison, OrderedWeightsWidenTheGap) {
  // same laws, heavier weight on the less dispersed side
  const auto r = gwex::verify_dispersive_comparison(Distribution::uniform(0.5, 1.0), Weight::power(2.0),
                                                    Distribution::uniform(0.0, 1.0), Weight::identity(), 3);
  // on the probe range x^2 >= x fails below 1, so the pointwise weight order
  // does not hold here and the premise must come out false
  EXPECT_FALSE(r.weights_ordered);
  EXPECT_FALSE(r.premise_holds);
}

TEST(DispersiveComparison, InfiniteEndpointsBlockTheShapeRoute) {
  // the superadditive route is otherwise satisfied (order yes, densities at
  // the origin ordered), but both supports are unbounded, and the conclusion
  // genuinely fails: the quadratic weight scales the halved rate by 2^n
  const auto r = gwex::verify_dispersive_comparison(Distribution::exponential(1.0), Weight::power(2.0),
                                                    Distribution::exponential(0.5), Weight::power(2.0), 2,
                                                    StochasticOrder::superadditive);
  EXPECT_EQ(r.order_report.verdict, Verdict::yes);
  EXPECT_TRUE(r.density_condition);
  EXPECT_FALSE(r.endpoints_compatible);
  EXPECT_FALSE(r.premise_holds);
  EXPECT_FALSE(r.conclusion_holds);  // -115/3456 > 4 * (-115/3456)
}

TEST(DispersiveComparison, ConvexTransformRouteOnEqualLaws) {
  const auto r = gwex::verify_dispersive_comparison(Distribution::uniform(0.0, 1.0), Weight::identity(),
                                                    Distribution::uniform(0.0, 1.0), Weight::identity(), 2,
                                                    StochasticOrder::convex_transform);
  EXPECT_TRUE(r.premise_holds);
  EXPECT_TRUE(r.conclusion_holds);
  EXPECT_NEAR(r.gwe_x, r.gwe_y, 1e-12);
}

TEST(DispersiveComparison, RejectsNonSpreadOrders) {
  EXPECT_THROW(gwex::verify_dispersive_comparison(Distribution::uniform(0.0, 1.0), Weight::identity(),
                                                  Distribution::uniform(0.0, 1.0), Weight::identity(), 2,
                                                  StochasticOrder::st),
               std::invalid_argument);
}

TEST(DeltaAnalysis, TriangularPairSeparatesCleanly) {
  const auto r = gwex::delta_analysis(Distribution::triangular_up(), Weight::identity(),
                                      Distribution::triangular_down(), Weight::identity(), 2);
  // Delta(u) = 2 - 2 sqrt(1-u) >= 0 everywhere
  EXPECT_NEAR(r.integral_delta, 2.0 / 3.0, 1e-3);
  EXPECT_TRUE(r.negative_region_empty);
  EXPECT_FALSE(r.positive_region_empty);
  EXPECT_NEAR(r.mass_negative, 0.0, 1e-12);
  for (const auto& p : r.positions) {
    EXPECT_TRUE(p.evaluable);
    EXPECT_TRUE(p.separated);
  }
  EXPECT_TRUE(r.premise_holds);
  EXPECT_NEAR(r.gwe_x, -2.0 / 3.0, 1e-9);
  EXPECT_NEAR(r.gwe_y, -696.0 / 8820.0, 1e-9);
  EXPECT_TRUE(r.conclusion_holds);
  // the single-observation ordering is the integral premise in disguise
  EXPECT_LE(r.single_gwe_x, r.single_gwe_y + 1e-12);
}

TEST(DeltaAnalysis, ReversedPairFails) {
  const auto r = gwex::delta_analysis(Distribution::triangular_down(), Weight::identity(),
                                      Distribution::triangular_up(), Weight::identity(), 2);
  EXPECT_TRUE(r.positive_region_empty);
  EXPECT_LT(r.integral_delta, 0.0);
  EXPECT_FALSE(r.premise_holds);
  EXPECT_FALSE(r.conclusion_holds);
}

TEST(DeltaAnalysis, LegacyDensityIndexIsIllDefinedAtTheTop) {
  const auto r = gwex::delta_analysis(Distribution::triangular_up(), Weight::identity(),
                                      Distribution::triangular_down(), Weight::identity(), 2,
                                      /*legacy_density_index=*/true);
  ASSERT_EQ(r.positions.size(), 2u);
  EXPECT_TRUE(r.positions[0].evaluable);    // i = 1: shape parameters stay positive
  EXPECT_FALSE(r.positions[1].evaluable);   // i = n: second shape parameter drops to 2n - 4n + 2 <= 0
  EXPECT_FALSE(r.premise_holds);
}

TEST(DeltaAnalysis, OddSizeChecksTheMedianPosition) {
  const auto r = gwex::delta_analysis(Distribution::triangular_up(), Weight::identity(),
                                      Distribution::triangular_down(), Weight::identity(), 3);
  ASSERT_EQ(r.positions.size(), 3u);
  EXPECT_EQ(r.positions[0].position, 1);
  EXPECT_EQ(r.positions[1].position, 2);
  EXPECT_EQ(r.positions[2].position, 3);
  EXPECT_TRUE(r.premise_holds);
  EXPECT_TRUE(r.conclusion_holds);
}

TEST(DeltaAnalysis, Validation) {
  const auto u01 = Distribution::uniform(0.0, 1.0);
  EXPECT_THROW(gwex::delta_analysis(u01, Weight::identity(), u01, Weight::identity(), 1),
               std::invalid_argument);
  EXPECT_THROW(gwex::delta_analysis(u01, Weight::identity(), u01, Weight::identity(), 2, false, 32),
               std::invalid_argument);
}

TEST(SymmetryCheck, SymmetricLawGivesZeros) {
  const auto r = gwex::check_symmetry_characterization(Distribution::uniform(-1.0, 1.0), Weight::identity());
  EXPECT_TRUE(r.center_candidate);
  EXPECT_LT(r.profile_asymmetry, 1e-10);
  EXPECT_TRUE(r.symmetric_profile);
  ASSERT_EQ(r.gwe.size(), 3u);
  for (double v : r.gwe) EXPECT_NEAR(v, 0.0, 1e-8);
  EXPECT_TRUE(r.all_zero);
  EXPECT_TRUE(r.consistent);
}

TEST(SymmetryCheck, OneSidedLawIsConsistentlyNonzero) {
  const auto r = gwex::check_symmetry_characterization(Distribution::exponential(1.0), Weight::identity());
  EXPECT_FALSE(r.center_candidate);
  EXPECT_FALSE(r.symmetric_profile);
  EXPECT_FALSE(r.all_zero);  // n = 1 already gives -1/8
  EXPECT_TRUE(r.consistent);
}

TEST(SymmetryCheck, StraddlingButAsymmetricLaw) {
  // cdf (x + 2/3)^2 on (-2/3, 1/3): zero mean, support straddles zero, but the
  // shape is visibly lopsided and the odd design sizes stay away from zero
  std::vector<double> x, F;
  const int knots = 600;
  for (int k = 0; k <= knots; ++k) {
    const double t = static_cast<double>(k) / knots;
    x.push_back(t - 2.0 / 3.0);
    F.push_back(t * t);
  }
  const auto tilted = Distribution::tabulated(x, F);
  const auto r = gwex::check_symmetry_characterization(tilted, Weight::identity(), {1, 3});
  EXPECT_TRUE(r.center_candidate);
  EXPECT_GT(r.profile_asymmetry, 0.01);
  EXPECT_FALSE(r.symmetric_profile);
  EXPECT_NEAR(r.gwe[0], -1.0 / 18.0, 1e-4);
  EXPECT_GT(std::abs(r.gwe[1]), 1e-3);
  EXPECT_FALSE(r.all_zero);
  EXPECT_TRUE(r.consistent);
}

TEST(SymmetryCheck, Validation) {
  EXPECT_THROW(gwex::check_symmetry_characterization(Distribution::uniform(-1.0, 1.0), Weight::power(2.0)),
               std::invalid_argument);
  EXPECT_THROW(
      gwex::check_symmetry_characterization(Distribution::uniform(-1.0, 1.0), Weight::identity(), {2}),
      std::invalid_argument);
}

TEST(ExponentialCheck, UnitRateMatchesOnBothWeights) {
  const auto r = gwex::check_exponential_characterization(Distribution::exponential(1.0));
  EXPECT_NEAR(r.gwe_linear, -0.125, 1e-9);
  EXPECT_NEAR(r.gwe_quadratic, -0.125, 1e-9);
  EXPECT_TRUE(r.matches);
}

TEST(ExponentialCheck, OtherRatesFailOnTheQuadraticWeight) {
  const auto r = gwex::check_exponential_characterization(Distribution::exponential(2.0));
  EXPECT_NEAR(r.gwe_linear, -0.125, 1e-9);     // scale-free under w(x) = x
  EXPECT_NEAR(r.gwe_quadratic, -0.0625, 1e-9); // the quadratic weight sees the rate
  EXPECT_FALSE(r.matches);
}

TEST(ExponentialCheck, NonExponentialLawFails) {
  EXPECT_FALSE(gwex::check_exponential_characterization(Distribution::uniform(0.0, 1.0)).matches);
}
